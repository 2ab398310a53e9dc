from .app import build_parser, cli
from .commands import CommandContext
from .messages import MessageService

__all__ = ['build_parser', 'cli', 'CommandContext', 'MessageService']
