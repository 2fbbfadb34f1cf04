"""
インストールせずにコマンドを試すための入口。

    python run.py kernel --table z6.json --A 0x3F --B '[1]'
    python run.py verify --suite all --json
"""

import sys

from periodica.cli import main


if __name__ == '__main__':
    sys.exit(main())
