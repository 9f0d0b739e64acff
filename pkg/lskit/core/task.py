# -*- coding: utf-8 -*-
__all__ = ('Task', 'TaskManager')

import logging

import gevent
from gevent.event import Event
from gevent.greenlet import Greenlet

from .errors import LskitError


LOG = logging.getLogger(__name__)


def make_callable(what, names):
    if callable(what):
        return what
    for name in names:
        method = getattr(what, name, None)
        if method:
            return method


class Task(object):
    """
    A unit of work run in its own greenlet.  ``run`` is a callable, or
    an object with a ``run`` method; it receives the positional args.
    """
    def __init__(self, run, *args):
        assert run is not None
        self.started = Event()
        self.result = None
        self._error = None
        self._obj = run
        self._args = args
        self._greenlet = None
        TaskManager.register(self)

    def __repr__(self):
        return "%s:%x %r" % (self.__class__.__name__, id(self), self._obj)

    def __str__(self):
        return "%x [%s] %r" % (id(self), self.state, self._obj)

    def __bool__(self):
        if self._greenlet is None:
            return False
        return bool(self._greenlet)

    __nonzero__ = __bool__

    def wait(self, timeout=None):
        if not self._greenlet:
            self.started.wait(timeout=timeout)
        self._greenlet.join(timeout=timeout)
        return self

    def start(self):
        if self.state == 'NEW':
            self._greenlet = Greenlet(self._run)
            self._greenlet.start()
            return self
        raise RuntimeError('Cannot start, invalid state: ' + self.state)

    def _run(self):
        method = make_callable(self._obj, ['run'])
        if not method:
            raise ValueError("Unable to run: %r" % (self._obj,))
        LOG.info("RUNNING %r", self)
        self.started.set()
        try:
            self.result = method(*self._args)
            LOG.info("STOPPED %r", self)
        except LskitError as ex:
            LOG.info("ERROR %r: %s", self, ex)
            self._error = ex
        except Exception as ex:
            LOG.exception("ERROR %r", self)
            self._error = ex
        finally:
            TaskManager.unregister(self)
        return self.result

    @property
    def error(self):
        if self._error is not None:
            return self._error
        if self._greenlet:
            return self._greenlet.exception

    @property
    def state(self):
        if self._greenlet is None:
            return 'NEW'
        if bool(self._greenlet):
            return 'RUNNING'
        if self.error is not None:
            return 'ERROR'
        return 'STOPPED'

    def get(self):
        """
        Wait, then return the result or re-raise the task's exception
        """
        self.wait()
        if self.error is not None:
            raise self.error
        return self.result

    def stop(self):
        if self.state == 'RUNNING':
            stop_fn = make_callable(getattr(self._obj, 'stop', None), [])
            if stop_fn:
                stop_fn()
            self._greenlet.kill()
        return self


class TaskManager(object):
    _tasks = dict()

    @classmethod
    def count(cls):
        return len(cls._tasks)

    @classmethod
    def spawn(cls, obj, *args):
        task = Task(obj, *args)
        task.start()
        return task

    @classmethod
    def map(cls, fn, items):
        """
        Run fn on every item concurrently; results in input order.  The
        first failure is re-raised after every task has finished.
        """
        tasks = [cls.spawn(fn, item) for item in items]
        gevent.joinall([task._greenlet for task in tasks])
        return [task.get() for task in tasks]

    @classmethod
    def register(cls, task):
        assert isinstance(task, Task)
        if id(task) not in cls._tasks:
            cls._tasks[id(task)] = task

    @classmethod
    def unregister(cls, task):
        assert isinstance(task, Task)
        if id(task) in cls._tasks:
            del cls._tasks[id(task)]

    @classmethod
    def stopall(cls):
        for task in list(cls._tasks.values()):
            task.stop()
