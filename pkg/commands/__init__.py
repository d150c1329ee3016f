"""
Command-line subcommands. Each module exposes add_<name>_parser(subparsers)
and handle_<name>(args) returning the text written to stdout.
"""
