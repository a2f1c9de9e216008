"""
Command Routing

Each package exposes a CommandRouter in its controller module; routers.py
collects them and main.py turns the registry into argparse subcommands.

Example:
    router = CommandRouter()

    @router.command('build', help='Emit a biorthogonal system', arguments=[
        argument('--system', metavar='PATH'),
    ])
    def build(args: argparse.Namespace) -> int:
        ...
"""

import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

Handler = Callable[[argparse.Namespace], int]


@dataclass(frozen=True)
class Argument:
    flags: tuple[str, ...]
    options: dict[str, Any] = field(default_factory=dict)


def argument(*flags: str, **options: Any) -> Argument:
    """Declare one argparse argument for a command"""
    return Argument(flags=flags, options=options)


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Handler
    arguments: tuple[Argument, ...] = ()


class CommandRouter:
    """Registry of subcommands"""

    def __init__(self):
        self.commands: list[Command] = []

    def command(self, name: str, *, help: str, arguments: Sequence[Argument] = ()):
        def register(handler: Handler) -> Handler:
            self.commands.append(Command(name, help, handler, tuple(arguments)))
            return handler

        return register

    def include_router(self, other: 'CommandRouter') -> None:
        known = {command.name for command in self.commands}
        for command in other.commands:
            if command.name in known:
                raise ValueError(f'duplicate command: {command.name}')
            self.commands.append(command)

    def install(self, subparsers, parents: Sequence[argparse.ArgumentParser] = ()) -> None:
        """Create one subparser per command and bind its handler"""
        for command in self.commands:
            parser = subparsers.add_parser(command.name, help=command.help, parents=list(parents))
            for arg in command.arguments:
                parser.add_argument(*arg.flags, **arg.options)
            parser.set_defaults(handler=command.handler)
