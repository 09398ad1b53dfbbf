import sys

from bezout.cli.main import main

sys.exit(main())
