import sys

from cli import cli


def main() -> int:
    return cli(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
