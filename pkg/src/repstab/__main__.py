import sys

from repstab.cli import main

sys.exit(main())
