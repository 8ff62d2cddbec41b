import sys
from osn_cherednik.cli.commands import main


if __name__ == "__main__":
	sys.exit(main())
