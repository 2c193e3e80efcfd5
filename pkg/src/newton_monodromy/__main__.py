import sys

from newton_monodromy.cli.commands import main

sys.exit(main())
