import sys

from charloci.cli import main

sys.exit(main())
