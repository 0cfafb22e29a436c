from os import environ
from queue import Queue
from threading import Thread

from .faithfulerror import ParameterError

THREADS_VARIABLE = "CVFAITHFUL_THREADS"


def thread_count(threads: int | None = None) -> int:
    if threads is None:
        threads = environ.get(THREADS_VARIABLE, "1")
    try:
        threads = int(threads)
    except (TypeError, ValueError):
        raise ParameterError("thread_count", "'%s' is not a thread count" % threads, field="threads")
    if threads < 1:
        raise ParameterError("thread_count", "thread count %d below 1" % threads, field="threads")
    return threads


class ChunkWorker(Thread):

    def __init__(self, function, chunks, output_queue):
        super(ChunkWorker, self).__init__()
        self.function = function
        self.chunks = chunks
        self.output_queue = output_queue
        self.start()

    def run(self):
        for index, chunk in self.chunks:
            try:
                self.output_queue.put((index, self.function(chunk)))
            except BaseException as e:
                self.output_queue.put((index, e))


def map_chunks(function, items, threads: int | None = None) -> list:
    """[function(item) for item in items], spread over worker threads.

    Results come back in item order whatever the scheduling; the first exception
    raised by a worker is re-raised here.
    """
    items = list(items)
    threads = min(thread_count(threads), max(1, len(items)))
    if threads == 1:
        return [function(item) for item in items]

    output_queue = Queue()
    indexed = list(enumerate(items))
    workers = [ChunkWorker(function, indexed[start::threads], output_queue) for start in range(threads)]
    results = [None] * len(items)
    caught = None
    for _ in range(len(items)):
        index, result = output_queue.get()
        if isinstance(result, BaseException):
            caught = caught or result
        else:
            results[index] = result
    for worker in workers:
        worker.join()
    if caught is not None:
        raise caught
    return results
