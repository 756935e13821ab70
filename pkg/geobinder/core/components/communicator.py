#!/usr/bin/env python3
# -*- coding: UTF-8 -*-

"""
Copyright 2020-2026 The geobinder Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""

import time
import collections
import multiprocessing

from core.components import exceptions

# worker -> 主进程的结果消息, kind 为 Communicator.BEGIN 或 Communicator.DONE
ScanMessage = collections.namedtuple("ScanMessage", ["kind", "worker_id", "index", "row"])


class Communicator(object):
    """
    进程间通信: 当前模块名, 以及扫描的任务/结果队列

    任务队列传递 (index, point), None 表示 worker 退出;
    结果队列传递 ScanMessage, 每个网格点先发送 BEGIN 再发送 DONE
    """

    TASK_QUEUE = "scan_task"
    RESULT_QUEUE = "scan_result"
    BEGIN = "begin"
    DONE = "done"

    def __new__(cls):
        if not hasattr(cls, "instance"):
            cls.instance = super(Communicator, cls).__new__(cls)
            cls.instance.queues = {}
            cls.instance.init_new_module("Main")
        return cls.instance

    @classmethod
    def reset(cls):
        """
        用于重置Communicator实例
        """
        if hasattr(cls, "instance"):
            del cls.instance

    def init_new_module(self, module_name):
        """
        设置当前module名, worker 进程启动后调用

        Parameters:
            module_name - 设置的module名
        """
        self.module_name = module_name

    def get_module_name(self):
        return self.module_name

    def is_worker(self):
        return self.module_name.startswith("ScanWorker")

    def open_scan_queues(self):
        """
        创建任务/结果队列, 必须在fork worker之前调用
        """
        for name in (self.TASK_QUEUE, self.RESULT_QUEUE):
            self.queues[name] = PipeQueue()

    def close_scan_queues(self):
        for name in (self.TASK_QUEUE, self.RESULT_QUEUE):
            queue = self.queues.pop(name, None)
            if queue is not None:
                queue.close()

    def send_task(self, index, point):
        self._queue(self.TASK_QUEUE).put((index, point))

    def send_stop(self):
        self._queue(self.TASK_QUEUE).put(None)

    def get_task(self):
        """
        阻塞获取下一个网格点

        Returns:
            (index, point), 收到退出信号时返回 None
        """
        return self._queue(self.TASK_QUEUE).get()

    def send_begin(self, worker_id, index):
        self._queue(self.RESULT_QUEUE).put(ScanMessage(self.BEGIN, worker_id, index, None))

    def send_done(self, worker_id, index, row):
        """
        发送计算结果

        Raises:
            exceptions.QueueValueError - row 无法序列化传输
        """
        self._queue(self.RESULT_QUEUE).put(ScanMessage(self.DONE, worker_id, index, row))

    def get_result(self, timeout=None):
        """
        获取一条 worker 消息

        Parameters:
            timeout - float, 等待秒数, None 表示一直阻塞

        Returns:
            ScanMessage

        Raises:
            超时时产生exceptions.QueueEmpty异常
        """
        return self._queue(self.RESULT_QUEUE).get(timeout)

    def _queue(self, queue_name):
        if queue_name not in self.queues:
            raise exceptions.QueueNotExist
        return self.queues[queue_name]


class PipeQueue(object):
    """
    单向 Pipe 加读写锁, 支持多个读者与多个写者

    读锁只在单次短时 poll 期间持有, 持锁进程被杀死时其余读者最多阻塞 POLL_INTERVAL
    """

    POLL_INTERVAL = 0.2

    def __init__(self):
        self.read_lock = multiprocessing.Lock()
        self.write_lock = multiprocessing.Lock()
        self.pipe_receiver, self.pipe_sender = multiprocessing.Pipe(False)

    def get(self, timeout=None):
        """
        Parameters:
            timeout - float, 等待秒数, None 表示一直阻塞

        Raises:
            exceptions.QueueEmpty - 超时
        """
        deadline = None if timeout is None else time.time() + timeout
        while True:
            wait = self.POLL_INTERVAL
            if deadline is not None:
                wait = min(wait, max(0.0, deadline - time.time()))
            if self.read_lock.acquire(timeout=self.POLL_INTERVAL):
                try:
                    if self.pipe_receiver.poll(wait):
                        return self.pipe_receiver.recv()
                finally:
                    self.read_lock.release()
            if deadline is not None and time.time() >= deadline:
                raise exceptions.QueueEmpty

    def put(self, data):
        with self.write_lock:
            try:
                self.pipe_sender.send(data)
            except ValueError:
                raise exceptions.QueueValueError

    def close(self):
        self.pipe_sender.close()
        self.pipe_receiver.close()
