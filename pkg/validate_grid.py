# -*- coding: utf-8 -*-
"""
网格批量验证 / Batch validation over a (model, n, d) grid

验证内容 / Validation contents:
1. 对每个格点采样若干群表示, 运行全部检测器与阿贝尔化交叉检验
2. 统计平凡性、自由性证书数与交叉检验失败数
3. 附上解析界: 非嵌入树级数界, 角事件界, 叶子界 (正模型), 正字比例 (方形模型)
4. 输出 JSON 汇总

用法 / Usage:
    python validate_grid.py --n 10 20 --d 0.1 0.3 0.5 --samples 20 --output grid.json
"""

import argparse
import json
import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.diagrams import corner_probability_bound
from src.freeness import non_tree_bound
from src.harness import CrossCheckError, analyze, trial_seed
from src.presentation import (
    Model,
    density_string,
    distinct_letter_probability,
    num_relators,
    positive_word_share,
    sample_presentation,
)
from src.square_complex import leaf_probability_bound


def parse_arguments(argv=None):
    """解析命令行参数"""
    parser = argparse.ArgumentParser(
        description='Grid validation of the detectors against the abelianization\n'
                    '检测器与阿贝尔化的网格验证',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument('--model', choices=[m.value for m in Model], nargs='+',
                        default=[m.value for m in Model], help='模型 / models')
    parser.add_argument('--n', type=int, nargs='+', default=[5, 10, 20], help='生成元个数 / generator counts')
    parser.add_argument('--d', type=str, nargs='+', default=['0.1', '0.2', '0.3', '0.5'],
                        help='密度 / densities')
    parser.add_argument('--samples', type=int, default=10, help='每格样本数 / samples per cell')
    parser.add_argument('--seed', type=int, default=0, help='主种子 / master seed')
    parser.add_argument('--bundle-dir', type=str, default=None, help='复现包目录 / reproduction bundle directory')
    parser.add_argument('--output', type=str, default='grid_validation.json', help='JSON 输出 / output path')
    return parser.parse_args(argv)


def validate_cell(model: Model, n: int, d: str, samples: int, seed: int, bundle_dir=None) -> dict:
    """一个格点 / one (model, n, d) cell"""
    cell = {
        'model': model.value,
        'n': n,
        'd': density_string(d),
        'num_relators': num_relators(n, d, model),
        'samples': samples,
        'trivial_certified': 0,
        'free_certified': 0,
        'violations': [],
    }
    bound = non_tree_bound(n, d, model)
    cell['non_tree_bound'] = None if math.isinf(bound) else bound
    cell['corner_bound'] = corner_probability_bound(n, float(d), model)
    cell['generic_share'] = distinct_letter_probability(n)
    if model is Model.SQUARE:
        cell['positive_word_share'] = positive_word_share(n)
    else:
        cell['leaf_bound'] = leaf_probability_bound(n, d)

    for sample in range(samples):
        p = sample_presentation(n, d, model, trial_seed(seed, n, d, sample))
        try:
            report = analyze(p, bundle_dir=bundle_dir)
        except CrossCheckError as exc:
            cell['violations'].append({
                'seed': exc.seed,
                'message': str(exc),
                'bundle': str(exc.bundle_path) if exc.bundle_path else None,
            })
            continue
        cell['trivial_certified'] += report.triviality.certified
        cell['free_certified'] += report.freeness.certified
    return cell


def validate_grid(models, n_values, d_values, samples, seed, bundle_dir=None) -> dict:
    cells = []
    for model in models:
        for n in n_values:
            for d in d_values:
                cell = validate_cell(Model.parse(model), n, d, samples, seed, bundle_dir)
                print(f"  {cell['model']:<8} n={n:<5} d={cell['d']:<6} |R|={cell['num_relators']:<8} "
                      f"trivial={cell['trivial_certified']}/{samples} free={cell['free_certified']}/{samples} "
                      f"violations={len(cell['violations'])}", flush=True)
                cells.append(cell)
    return {
        'seed': seed,
        'samples_per_cell': samples,
        'total_violations': sum(len(c['violations']) for c in cells),
        'cells': cells,
    }


def main(argv=None) -> int:
    args = parse_arguments(argv)

    print("=" * 80)
    print("网格验证 / Grid validation")
    print("=" * 80)

    summary = validate_grid(args.model, args.n, args.d, args.samples, args.seed, args.bundle_dir)

    output = Path(args.output)
    output.write_text(json.dumps(summary, indent=2, ensure_ascii=False), encoding='utf-8')

    print("\n" + "=" * 80)
    print(f"交叉检验失败 / cross-check violations: {summary['total_violations']}")
    print(f"结果已保存 / saved to: {output}")
    print("=" * 80)
    return 2 if summary['total_violations'] else 0


if __name__ == '__main__':
    sys.exit(main())
