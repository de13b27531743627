import sys

from cpog.cli import main

sys.exit(main())
