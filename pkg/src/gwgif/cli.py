"""Command-line tool wrapping the filters, applications, and metrics.

Commands:
  filter   run one filter on an image, optionally with a separate guide
  enhance  self-guided detail enhancement
  denoise  self-guided smoothing, optionally adding seeded noise first
  compare  seeded noise + all three filters + CSV metrics report

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 dimension/parameter
error.
"""

import argparse
import csv
import sys
import time
from pathlib import Path

from .applications import (
    EnhanceParams,
    NoiseSpec,
    add_gaussian_noise,
    denoise,
    detail_enhance,
)
from .edges import DEFAULT_EPS
from .fileio import load_image, save_image
from .filters import FILTERS, FilterParams, run_filter
from .metrics import evaluate_pair

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_PARAM = 3

COMPARE_ORDER = ("gif", "wgif", "gwgif")
CSV_HEADER = ["filter", "psnr_db", "ssim", "avg_gradient", "millis"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_io_flags(sp, guide=False):
    sp.add_argument("-i", "--input", required=True, help="input image (PNG or PGM)")
    sp.add_argument("-o", "--output", required=True, help="output path")
    if guide:
        sp.add_argument(
            "-g", "--guide", default=None, help="guide image (default: the input)"
        )


def _add_filter_flags(sp, radius, lam, selector=True):
    if selector:
        sp.add_argument(
            "--filter",
            choices=sorted(FILTERS),
            default="gwgif",
            help="which filter to run (default: %(default)s)",
        )
    sp.add_argument(
        "-r", "--radius", type=int, default=radius, help="window radius (default: %(default)s)"
    )
    sp.add_argument(
        "--lam",
        "--lambda",
        dest="lam",
        type=float,
        default=lam,
        help="ridge regularization strength (default: %(default)s)",
    )
    sp.add_argument(
        "--threshold-factor",
        type=float,
        default=1.7,
        help="edge-protection threshold multiple (default: %(default)s)",
    )
    sp.add_argument(
        "--k", type=int, default=7, help="flatness window radius (default: %(default)s)"
    )
    sp.add_argument(
        "--th-svar",
        type=float,
        default=11.0,
        help="flatness threshold on the 8-bit scale (default: %(default)s)",
    )
    sp.add_argument(
        "--thre",
        type=float,
        default=0.0,
        help="weight for non-uniform neighborhoods (default: %(default)s)",
    )
    sp.add_argument(
        "--eps",
        type=float,
        default=DEFAULT_EPS,
        help="edge-aware guard constant (default: %(default)s)",
    )


def _add_noise_flags(sp, sigma):
    sp.add_argument(
        "--sigma",
        type=float,
        default=sigma,
        help="Gaussian noise std on the 8-bit scale (default: %(default)s)",
    )
    sp.add_argument(
        "--seed", type=int, default=0, help="noise RNG seed (default: %(default)s)"
    )


def _filter_params(args):
    return FilterParams(
        radius=args.radius,
        lam=args.lam,
        threshold_factor=args.threshold_factor,
        k=args.k,
        th_svar=args.th_svar,
        thre=args.thre,
        eps=args.eps,
    )


def cmd_filter(args):
    X = load_image(args.input)
    G = load_image(args.guide) if args.guide else X
    Z = run_filter(args.filter, X, G, _filter_params(args))
    save_image(args.output, Z)
    return EXIT_OK


def cmd_enhance(args):
    X = load_image(args.input)
    params = EnhanceParams(filter_params=_filter_params(args), theta=args.theta)
    save_image(args.output, detail_enhance(X, params, args.filter))
    return EXIT_OK


def cmd_denoise(args):
    X = load_image(args.input)
    if args.sigma > 0:
        X = add_gaussian_noise(X, NoiseSpec(sigma=args.sigma, seed=args.seed))
    save_image(args.output, denoise(X, _filter_params(args), args.filter))
    return EXIT_OK


def cmd_compare(args):
    clean = load_image(args.input)
    params = _filter_params(args)
    if args.sigma > 0:
        noisy = add_gaussian_noise(clean, NoiseSpec(sigma=args.sigma, seed=args.seed))
    else:
        noisy = clean
    rows = []
    outputs = {}
    for name in COMPARE_ORDER:
        start = time.perf_counter()
        out = run_filter(name, noisy, noisy, params)
        millis = (time.perf_counter() - start) * 1000.0
        report = evaluate_pair(out, clean)
        rows.append([name, report.psnr, report.ssim, report.avg_gradient, millis])
        outputs[name] = out
    with open(args.output, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(CSV_HEADER)
        for name, p, s, g, ms in rows:
            writer.writerow([name, f"{p:.6g}", f"{s:.6g}", f"{g:.6g}", f"{ms:.6g}"])
    if args.save_images:
        outdir = Path(args.save_images)
        outdir.mkdir(parents=True, exist_ok=True)
        save_image(outdir / "noisy.png", noisy)
        for name, out in outputs.items():
            save_image(outdir / f"{name}.png", out)
    return EXIT_OK


def build_parser():
    parser = _Parser(
        prog="gwgif",
        description="Edge-preserving guided image filtering for grayscale images.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("filter", help="run one filter on an image")
    _add_io_flags(sp, guide=True)
    _add_filter_flags(sp, radius=16, lam=1.0)
    sp.set_defaults(func=cmd_filter)

    sp = sub.add_parser("enhance", help="self-guided detail enhancement")
    _add_io_flags(sp)
    _add_filter_flags(sp, radius=16, lam=0.04)
    sp.add_argument(
        "--theta",
        type=float,
        default=5.0,
        help="detail amplification factor (default: %(default)s)",
    )
    sp.set_defaults(func=cmd_enhance)

    sp = sub.add_parser("denoise", help="self-guided smoothing")
    _add_io_flags(sp)
    _add_filter_flags(sp, radius=9, lam=0.1)
    _add_noise_flags(sp, sigma=0.0)
    sp.set_defaults(func=cmd_denoise)

    sp = sub.add_parser(
        "compare", help="run all three filters on a noisy image and report metrics"
    )
    _add_io_flags(sp)
    _add_filter_flags(sp, radius=9, lam=0.1, selector=False)
    _add_noise_flags(sp, sigma=25.0)
    sp.add_argument(
        "--save-images",
        default=None,
        metavar="DIR",
        help="also save the noisy input and each filter output as PNGs",
    )
    sp.set_defaults(func=cmd_compare)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"gwgif: error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except OSError as exc:
        print(f"gwgif: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
