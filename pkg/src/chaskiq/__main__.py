"""Entry point for Chaskiq: python -m chaskiq"""

import sys


def main() -> None:
    from chaskiq.cli import main as cli_main

    sys.exit(cli_main())


if __name__ == "__main__":
    main()
