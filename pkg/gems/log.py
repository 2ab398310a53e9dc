import sys
import time

import config as cfg


def log_message(message: str, verbose: bool = False):
    if verbose and not cfg.VERBOSE:
        return
    stream = sys.stderr if cfg.LOG_TO_STDERR else sys.stdout
    print(f'[{time.strftime("%Y-%m-%d %H:%M:%S")}] {message}', file=stream)


discrepancy_sinks = []


def report_discrepancy(kind: str, detail: str, graph=None):
    """Log a result that contradicts the theory and hand it to every registered sink."""
    log_message(f'discrepancy {kind}: {detail}')
    for sink in discrepancy_sinks:
        sink(kind, detail, graph)
