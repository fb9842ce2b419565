# -*- coding: utf-8 -*-
"""
命令行接口 / Command-line interface

子命令 / subcommands:
  sample    采样并写出群表示 / sample a presentation
  analyze   检测平凡性、自由性与阿贝尔化 / run detectors and the oracle
  sweep     蒙特卡洛扫描, 输出 CSV / Monte Carlo sweep to CSV
  graphsim  随机图阈值实验 / random graph threshold run
  diagram   抽象图检查、实现搜索与概率界 / abstract diagram tools

退出码 / exit codes: 0 成功 ok, 1 用法错误 usage error, 2 交叉检验失败 cross-check violation
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .config import get_config, load_config
from .diagrams import (
    corner_probability_bound,
    diagram_stats,
    find_fulfillments,
    fulfillment_bound,
    iso_check,
    read_diagram,
    validate,
)
from .harness import CrossCheckError, analyze, sweep, write_csv
from .presentation import (
    Model,
    distinct_letter_probability,
    format_presentation,
    format_relator,
    read_presentation,
    sample_presentation,
    write_presentation,
)
from .random_graph import GraphProperty, estimate_threshold

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CROSS_CHECK = 2

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """用法错误以退出码 1 结束 / usage errors exit with code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="square-model",
        description="方形模型随机群工具 / Random groups in the square model",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--verbose", "-v", action="store_true", help="调试日志 / debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    sample = sub.add_parser("sample", help="采样群表示 / sample a presentation")
    sample.add_argument("--n", type=int, required=True, help="生成元个数 / number of generators")
    sample.add_argument("--d", type=str, required=True, help="密度 / density in (0, 1)")
    sample.add_argument("--model", choices=[m.value for m in Model], default=Model.POSITIVE.value)
    sample.add_argument("--seed", type=int, default=0)
    sample.add_argument("--out", type=str, default=None, help="输出文件 (默认 stdout)")

    an = sub.add_parser("analyze", help="分析群表示 / analyze a presentation file")
    an.add_argument("--in", dest="infile", required=True, help="群表示文件 / presentation file")
    an.add_argument("--format", choices=["text", "json"], default="text")
    an.add_argument("--bundle-dir", default=".", help="复现包目录 / reproduction bundle directory")

    sw = sub.add_parser("sweep", help="蒙特卡洛扫描 / Monte Carlo sweep")
    source = sw.add_mutually_exclusive_group(required=True)
    source.add_argument("--config", help="扁平键值配置文件 / flat key-value config file")
    source.add_argument("--preset", help="预设名称 / preset name")
    sw.add_argument("--out", required=True, help="CSV 输出 / CSV output path")

    gs = sub.add_parser("graphsim", help="随机图阈值 / random graph threshold")
    gs.add_argument("--mode", choices=[prop.value for prop in GraphProperty], required=True)
    gs.add_argument("--n", type=int, required=True)
    gs.add_argument("--delta", type=float, required=True, help="p = n^(delta-1)")
    gs.add_argument("--trials", type=int, required=True)
    gs.add_argument("--seed", type=int, default=0)

    dg = sub.add_parser("diagram", help="抽象图工具 / abstract diagram tools")
    dg.add_argument("file", help="图文件 / diagram file")
    action = dg.add_mutually_exclusive_group(required=True)
    action.add_argument("--check", action="store_true", help="结构校验 / structural checks")
    action.add_argument("--fulfill", action="store_true", help="在群表示中搜索实现 / search fulfillments")
    action.add_argument("--bound", action="store_true", help="实现概率上界 / fulfillment bound")
    dg.add_argument("--presentation", default=None, help="群表示文件 (--fulfill) / presentation file")
    dg.add_argument("--n", type=int, default=None)
    dg.add_argument("--d", type=float, default=None)
    dg.add_argument("--eps", type=float, default=0.0)
    dg.add_argument("--model", choices=[m.value for m in Model], default=Model.POSITIVE.value)
    dg.add_argument("--max", type=int, default=None, help="最多结果数 / maximum results")
    return parser


# ========== 子命令 Subcommands ==========

def _cmd_sample(args) -> int:
    p = sample_presentation(args.n, args.d, args.model, args.seed)
    if args.out:
        print(write_presentation(p, args.out))
    else:
        sys.stdout.write(format_presentation(p))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    p = read_presentation(args.infile)
    try:
        report = analyze(p, bundle_dir=args.bundle_dir)
    except CrossCheckError as exc:
        print(f"cross-check violation: {exc}", file=sys.stderr)
        if exc.bundle_path is not None:
            print(f"reproduction bundle: {exc.bundle_path} (seed={exc.seed})", file=sys.stderr)
        return EXIT_CROSS_CHECK
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2, ensure_ascii=False))
    else:
        sys.stdout.write(report.format_text())
    return EXIT_OK


def _cmd_sweep(args) -> int:
    if args.config:
        config = load_config(args.config)
    else:
        config = get_config(args.preset)
    rows = sweep(config)
    print(write_csv(rows, args.out))
    return EXIT_OK


def _cmd_graphsim(args) -> int:
    rate = estimate_threshold(args.n, args.delta, args.trials, GraphProperty(args.mode), args.seed)
    print(f"{args.n},{args.delta},{args.trials},{rate:.6f}")
    return EXIT_OK


def _cmd_diagram(args) -> int:
    d = read_diagram(args.file)
    defects = validate(d)
    if args.check:
        if defects:
            for defect in defects:
                print(defect)
            return EXIT_USAGE
        print("ok")
        return EXIT_OK
    if defects:
        raise ValueError(f"invalid diagram: {defects[0]}")

    if args.fulfill:
        if args.presentation is None:
            raise ValueError("--fulfill needs --presentation")
        p = read_presentation(args.presentation)
        found = find_fulfillments(d, p.relators, max_results=args.max)
        print(f"fulfillments: {len(found)}")
        for f in found:
            assignment = ", ".join(f"class {c}: {format_relator(w)}" for c, w in sorted(f.relators.items()))
            print(f"  {assignment}")
        return EXIT_OK

    if args.n is None or args.d is None:
        raise ValueError("--bound needs --n and --d")
    stats = diagram_stats(d)
    bound = fulfillment_bound(stats, args.n, args.d, args.model)
    print(f"faces={stats.faces} boundary={stats.boundary_length} fixed={stats.fixed_count}")
    print(f"exponent={bound.exponent:.6f} base={bound.base}")
    print(f"bound={bound.probability:.6g}{' (vacuous)' if bound.vacuous else ''}")
    print(f"corner_bound={corner_probability_bound(args.n, args.d, args.model):.6g} "
          f"generic_share={distinct_letter_probability(args.n):.6f}")
    print(f"isoperimetric(eps={args.eps}): {iso_check(stats, args.d, args.eps)}")
    return EXIT_OK


_COMMANDS = {
    "sample": _cmd_sample,
    "analyze": _cmd_analyze,
    "sweep": _cmd_sweep,
    "graphsim": _cmd_graphsim,
    "diagram": _cmd_diagram,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
