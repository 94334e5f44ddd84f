import sys

from .seqcli.cli import main

sys.exit(main())
