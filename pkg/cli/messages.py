import os
import sys
from typing import TextIO

from gems.log import log_message

RED = '\033[31m'
RESET = '\033[0m'


class MessageService:
    """Data goes to stdout (or the output file); reason codes and log lines go to stderr."""

    def __init__(self, out: TextIO | None = None, err: TextIO | None = None):
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.color = 'NO_COLOR' not in os.environ and self.err.isatty()

    def emit(self, text: str):
        self.out.write(text if text.endswith('\n') else text + '\n')

    def send_error(self, code: str, message: str):
        prefix = f'{RED}error{RESET}' if self.color else 'error'
        print(f'{prefix}: {code}: {message}', file=self.err)

    def log_message(self, message: str, verbose: bool = False):
        log_message(message, verbose)
