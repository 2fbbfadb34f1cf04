"""
periodica コマンド

    periodica kernel --table z6.json --A 0x3F --B '[1]'
    periodica real coc --set ray5_open.json
    periodica verify --suite all --json
"""

from argparse import SUPPRESS, ArgumentParser
from collections.abc import Sequence
from typing import Any, Optional
import json
import logging
import sys

from .._util import PeriodicaError
from .commands import COMMANDS, Invocation, UsageError, add_options, to_output


_LOG = logging.getLogger(__name__)

PROG = 'periodica'

_GROUP_HELP = {
    'magma':     'Cayley表の構造',
    'subset':    '部分集合の積と直和',
    'represent': '直和表現と正負分割',
    'solve':     '集合の方程式',
    'topo':      '周期的な集合の位相',
    'real':      '実数直線上の単位周期的な集合',
}


def _global_options(parser:ArgumentParser, suppress:bool) -> None:
    "サブコマンドの後ろにも書けるようにする。サブコマンド側は既定値を持たない"
    def _default(value):
        return SUPPRESS if suppress else value
    parser.add_argument('--json',     action='store_true', default=_default(False), help='結果をJSONで出力します')
    parser.add_argument('--seed',     type=int,            default=_default(0),     help='乱数の種')
    parser.add_argument('--force',    action='store_true', default=_default(False), help='総当たりの大きさの上限を無視します')
    parser.add_argument('--workers',  type=int,            default=_default(None),  help='並列に動かすスレッドの数')
    parser.add_argument('--timing',   action='store_true', default=_default(False), help='経過時間も出力します')
    parser.add_argument('-log-level', required=False,      default=_default('WARNING'), help='ログレベルを設定します', metavar='ログレベル')
    parser.add_argument('--stdout',   action='store_true', default=_default(False), help='ログの出力先を標準出力に強制します')


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog=PROG, description='有限マグマと実数直線上の周期的な集合の計算')
    _global_options(parser, suppress=False)
    commands = parser.add_subparsers(dest='command_name', metavar='COMMAND', required=True)

    groups: dict[str, Any] = {}
    for path, cmd in COMMANDS.items():
        if len(path) == 1:
            leaf = commands.add_parser(path[0], help=cmd.help, description=cmd.help)
        else:
            group, name = path
            if group not in groups:
                group_parser = commands.add_parser(group, help=_GROUP_HELP.get(group))
                groups[group] = group_parser.add_subparsers(dest=f'{group}_command', metavar='SUBCOMMAND', required=True)
            leaf = groups[group].add_parser(name, help=cmd.help, description=cmd.help)
        add_options(leaf, cmd.options)
        _global_options(leaf, suppress=True)
        leaf.set_defaults(command=cmd)
    return parser


def _configure_logging(log_level:str, stdout:bool) -> None:
    log_config: dict[str, Any] = {
        'level': log_level.upper()
    }
    if stdout: log_config['stream'] = sys.stdout
    logging.basicConfig(**log_config)


def _dumps(obj:Any) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(',', ':'))


def _format_text(payload:Any) -> str:
    if not isinstance(payload, dict):
        return _dumps(payload)
    return '\n'.join(f'{key}: {value if isinstance(value, str) else _dumps(value)}' for key, value in payload.items())


def main(argv:Optional[Sequence[str]]=None) -> int:
    """
    終了コードは、成功なら0、計算上のエラー(または検証の失敗)なら1、引数の誤りなら2。
    """
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exit:
        return int(exit.code or 0)

    try:
        _configure_logging(ns.log_level, ns.stdout)
    except ValueError:
        print(f'{PROG}: error: -log-level: 不明なログレベルです: {ns.log_level}', file=sys.stderr)
        return 2

    try:
        outcome = to_output(ns.command.handler(Invocation(ns)))
    except UsageError as error:
        print(f'{PROG}: error: {error}', file=sys.stderr)
        return 2
    except PeriodicaError as error:
        _LOG.debug('計算を中断しました', exc_info=True)
        print(_dumps(error.to_dict()), file=sys.stderr)
        return 1
    except OSError as error:
        print(_dumps({'error': type(error).__name__, 'message': str(error)}), file=sys.stderr)
        return 1

    if ns.json:
        print(_dumps(outcome.payload))
    elif outcome.raw is not None:
        print(outcome.raw, end='' if outcome.raw.endswith('\n') else '\n')
    else:
        print(_format_text(outcome.payload))
    return outcome.code


__all__ = ('PROG', 'build_parser', 'main')


if __name__ == '__main__':
    sys.exit(main())
