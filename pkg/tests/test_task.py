#!/usr/bin/env python
from __future__ import print_function

import gevent
import pytest

from lskit.core.errors import InputError
from lskit.core.task import TaskManager


def test_result():
	def square(value):
		return value * value
	task = TaskManager.spawn(square, 7)
	assert task.get() == 49
	assert task.state == 'STOPPED'
	assert TaskManager.count() == 0


class Worker(object):
	def __init__(self):
		self.stopped = False

	def run(self):
		gevent.sleep(10)

	def stop(self):
		self.stopped = True


def test_stop():
	worker = Worker()
	task = TaskManager.spawn(worker)
	task.started.wait()
	assert task.state == 'RUNNING'
	assert TaskManager.count() == 1
	TaskManager.stopall()
	task.wait()
	assert worker.stopped
	assert task.state != 'RUNNING'


def test_error_is_reraised():
	def broken():
		raise InputError("values: bad")
	task = TaskManager.spawn(broken)
	task.wait()
	assert task.state == 'ERROR'
	with pytest.raises(InputError):
		task.get()


def test_map_keeps_order():
	def slow(value):
		gevent.sleep(0.001 * (5 - value))
		return value + 1
	assert TaskManager.map(slow, range(5)) == [1, 2, 3, 4, 5]
	assert TaskManager.count() == 0


def test_map_reraises():
	def picky(value):
		if value == 2:
			raise InputError("item 2")
		return value
	with pytest.raises(InputError):
		TaskManager.map(picky, range(4))


if __name__ == "__main__":
	import logging
	logging.basicConfig()
	test_result()
	test_stop()
	test_error_is_reraised()
	test_map_keeps_order()
	test_map_reraises()
