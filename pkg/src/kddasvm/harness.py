"""Experiment runner: repeated random splits, feature extraction, classification.

Usage::

    kddasvm run          --config exp.cfg --out results/
    kddasvm table1       --config exp.cfg --out results/ --repeats 10
    kddasvm sweep-sigma  --config exp.cfg --values 0.1,1,10
    kddasvm sweep-m      --config exp.cfg --values 1,2,3
    kddasvm boundary     --config exp.cfg

Config files hold ``key = value`` lines; ``#`` starts a comment. Every CSV
written here is a pure function of the config, so reruns are byte-identical.
Wall-clock timings go to stderr only.
"""
import argparse
import dataclasses
import io
import logging
import sys
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .dataset import (
    SplitSpec,
    load_image_dir,
    make_blobs,
    make_rings,
    split_indices,
)
from .errors import InvalidConfig, KddaSvmError
from .extractors import kdda_fit, kdda_transform, kpca_fit, kpca_transform
from .kernels import KernelSpec
from .multiclass import (
    nn_predict,
    nn_train,
    ovr_predict,
    ovr_train,
    pairwise_predict,
    pairwise_train,
)
from .svm import NotConvergedWarning, SvmTrainConfig

log = logging.getLogger(__name__)

# RBF scale used for KDDA on 0..255 face images; divided by 255**2 because
# the loader scales pixels to [0, 1].
KDDA_SIGMA2_RAW_PIXELS = 5e6
KDDA_SIGMA2_UNIT_PIXELS = KDDA_SIGMA2_RAW_PIXELS / 255.0**2

EXTRACTORS = ("kdda", "kpca", "none")
CLASSIFIERS = ("svm-ovr", "svm-pairwise", "nn")
SVM_SIGMA2_FACTORS = (0.1, 0.3, 1.0, 3.0, 10.0)
SVM_C_GRID = (1.0, 10.0, 100.0)
TABLE1_METHODS = (("kdda", "svm-ovr"), ("kdda", "nn"), ("kpca", "nn"))


@dataclass(frozen=True)
class ExperimentConfig:
    dataset: str = "rings"  # rings | blobs | path to an image directory
    image_width: int = 92
    image_height: int = 112
    synth_classes: int = 4
    synth_per_class: int = 50
    synth_noise: float = 0.05
    synth_seed: int = 0
    extractor: str = "kdda"
    classifier: str = "svm-ovr"
    extractor_kernel: str = "rbf"
    extractor_sigma2: float = 0.0  # 0: dataset default
    tune_extractor: bool = False  # cross-validate the extractor rbf scale on training data
    extractor_degree: int = 2
    m_features: int = 0  # 0: C-1 for kdda, every usable component for kpca
    svm_kernel: str = "rbf"
    svm_sigma2: float = 0.0  # 0: tuned on the training split
    svm_c: float = 0.0  # 0: tuned on the training split
    kkt_tol: float = 1e-3
    max_passes: int = 10_000
    k_train: tuple = (5,)
    repeats: int = 10
    seed: int = 0
    boundary_classes: int = 6
    boundary_resolution: int = 100
    sweep_sigma2: tuple = ()
    sweep_m: tuple = ()

    def __post_init__(self):
        if self.extractor not in EXTRACTORS:
            raise InvalidConfig(f"extractor must be one of {EXTRACTORS}, got {self.extractor!r}")
        if self.classifier not in CLASSIFIERS:
            raise InvalidConfig(f"classifier must be one of {CLASSIFIERS}, got {self.classifier!r}")
        if self.repeats < 1:
            raise InvalidConfig("repeats must be >= 1")
        if not self.k_train:
            raise InvalidConfig("k_train list is empty")

    @property
    def method(self):
        return f"{self.extractor}+{self.classifier}"

    @property
    def is_image(self):
        return self.dataset not in ("rings", "blobs")


def _coerce(value, target):
    if isinstance(target, tuple):
        parts = [p.strip() for p in value.split(",") if p.strip()]
        return tuple(float(p) if any(ch in p for ch in ".eE") else int(p) for p in parts)
    if isinstance(target, bool):
        return value.lower() in ("1", "true", "yes")
    return type(target)(float(value)) if isinstance(target, int) else type(target)(value)


def parse_config(text, **overrides):
    """Build an ExperimentConfig from ``key = value`` lines."""
    defaults = ExperimentConfig()
    known = {f.name: getattr(defaults, f.name) for f in dataclasses.fields(ExperimentConfig)}
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfig(f"line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise InvalidConfig(f"line {lineno}: unknown key {key!r}")
        try:
            values[key] = _coerce(value, known[key])
        except ValueError as exc:
            raise InvalidConfig(f"line {lineno}: bad value for {key}: {value!r}") from exc
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**values)


def load_config(path, **overrides):
    return parse_config(Path(path).read_text(), **overrides)


def load_dataset(cfg):
    if cfg.dataset == "rings":
        return make_rings(cfg.synth_classes, cfg.synth_per_class, cfg.synth_noise, cfg.synth_seed)
    if cfg.dataset == "blobs":
        return make_blobs(cfg.synth_classes, cfg.synth_per_class, dim=2,
                          spread=max(cfg.synth_noise, 1e-12), seed=cfg.synth_seed)
    return load_image_dir(cfg.dataset, cfg.image_width, cfg.image_height)


def _kernel(family, sigma2, degree):
    if family == "rbf":
        return KernelSpec.rbf(sigma2)
    if family == "polynomial":
        return KernelSpec.polynomial(degree)
    if family == "sigmoid":
        return KernelSpec.sigmoid()
    return KernelSpec.linear()


def extractor_kernel(cfg, train=None):
    """Kernel for the extractor.

    An explicit ``extractor_sigma2`` wins. Otherwise image data get the
    face-recognition default and synthetic data the median squared pairwise
    distance of ``train``; ``tune_extractor`` replaces both with a
    cross-validated choice.
    """
    if cfg.extractor_kernel != "rbf":
        return _kernel(cfg.extractor_kernel, 1.0, cfg.extractor_degree)
    if cfg.extractor_sigma2 > 0:
        return KernelSpec.rbf(cfg.extractor_sigma2)
    if train is not None and cfg.tune_extractor:
        return KernelSpec.rbf(tune_extractor(cfg, train))
    if cfg.is_image or train is None:
        return KernelSpec.rbf(KDDA_SIGMA2_UNIT_PIXELS if cfg.is_image else 1.0)
    return KernelSpec.rbf(_median_sq_dist(train.samples))


def _stratified_folds(labels, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    fold = np.empty(labels.size, dtype=int)
    for cls in np.unique(labels):
        members = np.flatnonzero(labels == cls)
        fold[members] = rng.permutation(members.size) % 2
    return fold


def tune_extractor(cfg, train):
    """Two-fold cross-validated rbf scale for the extractor, from training data only.

    The grid scales the median squared pairwise distance. Inner folds use
    the configured classifier with an untuned SVM (median-distance scale,
    C = ``svm_c`` or 10). Ties go to the earliest grid entry.
    """
    base = _median_sq_dist(train.samples)
    grid = [base * f for f in SVM_SIGMA2_FACTORS]
    if min(train.class_sizes().values()) < 2:
        return base
    fold = _stratified_folds(train.labels, cfg.seed)
    best, best_acc = base, -1.0
    for s2 in grid:
        sub = dataclasses.replace(cfg, extractor_sigma2=s2)
        correct = 0
        for f in (0, 1):
            inner_tr, inner_te = train.subset(np.flatnonzero(fold != f)), train.subset(np.flatnonzero(fold == f))
            try:
                f_tr, f_te = extract(sub, inner_tr, inner_te)
            except KddaSvmError:
                continue
            svm_cfg = None
            if cfg.classifier != "nn":
                c = cfg.svm_c if cfg.svm_c > 0 else 10.0
                s = cfg.svm_sigma2 if cfg.svm_sigma2 > 0 else _median_sq_dist(f_tr)
                svm_cfg = _svm_config(cfg, s, c)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", NotConvergedWarning)
                model, predict = _train_classifier(cfg.classifier, f_tr, inner_tr.labels, svm_cfg)
            correct += int(np.sum(predict(model, f_te) == inner_te.labels))
        acc = correct / len(train)
        if acc > best_acc:
            best, best_acc = s2, acc
    return best


# --- one repeat ---------------------------------------------------------------

def extract(cfg, train, test, m_features=None, kernel=None):
    """Fit the configured extractor on ``train``; return (train_features, test_features)."""
    m = cfg.m_features if m_features is None else m_features
    if cfg.extractor == "none":
        return train.samples, test.samples
    kernel = extractor_kernel(cfg, train) if kernel is None else kernel
    if cfg.extractor == "kdda":
        model = kdda_fit(train.samples, train.labels, kernel, m)
        return kdda_transform(model, train.samples), kdda_transform(model, test.samples)
    model = kpca_fit(train.samples, kernel, m if m > 0 else len(train))
    if model.degenerate:
        raise InvalidConfig("KPCA found no component with positive variance")
    return kpca_transform(model, train.samples), kpca_transform(model, test.samples)


def _median_sq_dist(x):
    sq = np.einsum("ij,ij->i", x, x)
    d2 = np.maximum(sq[:, None] + sq[None, :] - 2.0 * x @ x.T, 0.0)
    off = d2[np.triu_indices(x.shape[0], 1)]
    med = float(np.median(off)) if off.size else 1.0
    return med if med > 0 else 1.0


def tune_svm(cfg, features, labels):
    """Pick SVM sigma2 and C by two-fold stratified cross-validation on training data.

    Values fixed in ``cfg`` are kept. The sigma2 grid scales the median squared
    pairwise distance of the features. Ties go to the earliest grid entry.
    """
    base = _median_sq_dist(features)
    sigmas = (cfg.svm_sigma2,) if cfg.svm_sigma2 > 0 else tuple(base * f for f in SVM_SIGMA2_FACTORS)
    costs = (cfg.svm_c,) if cfg.svm_c > 0 else SVM_C_GRID
    if cfg.svm_kernel != "rbf":
        sigmas = sigmas[:1]
    if len(sigmas) == 1 and len(costs) == 1:
        return sigmas[0], costs[0]
    _, counts = np.unique(labels, return_counts=True)
    if counts.min() < 2:
        return sigmas[len(sigmas) // 2], costs[min(1, len(costs) - 1)]
    fold = _stratified_folds(labels, cfg.seed)
    best, best_acc = None, -1.0
    for s2 in sigmas:
        for c in costs:
            svm_cfg = _svm_config(cfg, s2, c)
            correct = 0
            for f in (0, 1):
                tr, te = fold != f, fold == f
                if np.unique(labels[tr]).size < 2:
                    continue
                model, predict = _train_classifier(cfg.classifier, features[tr], labels[tr], svm_cfg)
                correct += int(np.sum(predict(model, features[te]) == labels[te]))
            acc = correct / labels.size
            if acc > best_acc:
                best, best_acc = (s2, c), acc
    return best


def _svm_config(cfg, sigma2, c):
    return SvmTrainConfig(c_cost=c, kernel=_kernel(cfg.svm_kernel, sigma2, 2),
                          kkt_tol=cfg.kkt_tol, max_passes=cfg.max_passes)


def _train_classifier(name, features, labels, svm_cfg):
    if name == "nn":
        return nn_train(features, labels), nn_predict
    if name == "svm-ovr":
        return ovr_train(features, labels, svm_cfg), ovr_predict
    return pairwise_train(features, labels, svm_cfg), pairwise_predict


@dataclass
class RepeatOutcome:
    rate: float = float("nan")
    error: str = ""
    extractor_sigma2: float = 0.0
    svm_sigma2: float = 0.0
    svm_c: float = 0.0
    nonconverged: int = 0

    @property
    def ok(self):
        return not self.error


def run_repeat(cfg, ds, k_train, repeat, m_features=None):
    """Split, extract, classify once. Failures are captured, never raised."""
    out = RepeatOutcome()
    try:
        spec = SplitSpec(k_train, seed=cfg.seed + repeat, repeat=repeat)
        tr_idx, te_idx = split_indices(ds, spec)
        if np.intersect1d(tr_idx, te_idx).size:
            raise KddaSvmError("train/test split overlaps")
        train, test = ds.subset(tr_idx), ds.subset(te_idx)
        kernel = None
        if cfg.extractor != "none":
            kernel = extractor_kernel(cfg, train)
            out.extractor_sigma2 = kernel.sigma2 if kernel.family == "rbf" else 0.0
        f_train, f_test = extract(cfg, train, test, m_features, kernel)
        svm_cfg = None
        if cfg.classifier != "nn":
            out.svm_sigma2, out.svm_c = tune_svm(cfg, f_train, train.labels)
            svm_cfg = _svm_config(cfg, out.svm_sigma2, out.svm_c)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", NotConvergedWarning)
            model, predict = _train_classifier(cfg.classifier, f_train, train.labels, svm_cfg)
        out.nonconverged = sum(issubclass(w.category, NotConvergedWarning) for w in caught)
        predicted = predict(model, f_test)
        out.rate = float(np.mean(predicted == test.labels))
    except (KddaSvmError, np.linalg.LinAlgError) as exc:
        out.error = f"{type(exc).__name__}: {exc}"
        log.warning("repeat %d (k_train=%d) failed: %s", repeat, k_train, out.error)
    return out


# --- reports ------------------------------------------------------------------

@dataclass
class Cell:
    k_train: int
    method: str
    outcomes: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def rates(self):
        return [o.rate for o in self.outcomes if o.ok]

    @property
    def failed(self):
        return sum(not o.ok for o in self.outcomes)

    @property
    def complete(self):
        return self.failed == 0 and bool(self.outcomes)

    @property
    def mean_rate(self):
        r = self.rates
        return float(np.mean(r)) if r else float("nan")

    @property
    def stddev(self):
        r = self.rates
        return float(np.std(r)) if r else float("nan")


@dataclass
class Report:
    config: ExperimentConfig
    cells: list = field(default_factory=list)

    @property
    def failed(self):
        return sum(c.failed for c in self.cells)

    def cell(self, k_train, method):
        return next(c for c in self.cells if c.k_train == k_train and c.method == method)

    def to_csv(self):
        buf = io.StringIO()
        _write_header(buf, self.config)
        for c in self.cells:
            for r, o in enumerate(c.outcomes):
                buf.write(f"# tuned k_train={c.k_train} method={c.method} repeat={r} "
                          f"extractor_sigma2={_fmt(o.extractor_sigma2)} "
                          f"svm_sigma2={_fmt(o.svm_sigma2)} svm_c={_fmt(o.svm_c)}\n")
        buf.write("k_train,method,mean_rate,stddev,repeats,failed,complete\n")
        for c in self.cells:
            buf.write(f"{c.k_train},{c.method},{_fmt(c.mean_rate)},{_fmt(c.stddev)},"
                      f"{len(c.rates)},{c.failed},{str(c.complete).lower()}\n")
        return buf.getvalue()

    def repeats_csv(self):
        buf = io.StringIO()
        buf.write("k_train,method,repeat,rate,extractor_sigma2,svm_sigma2,svm_c,error\n")
        for c in self.cells:
            for r, o in enumerate(c.outcomes):
                err = o.error.replace(",", ";").replace("\n", " ")
                buf.write(f"{c.k_train},{c.method},{r},{_fmt(o.rate)},{_fmt(o.extractor_sigma2)},"
                          f"{_fmt(o.svm_sigma2)},{_fmt(o.svm_c)},{err}\n")
        return buf.getvalue()

    def table(self):
        methods = list(dict.fromkeys(c.method for c in self.cells))
        ks = sorted({c.k_train for c in self.cells})
        lines = ["k\t" + "\t".join(methods)]
        for k in ks:
            row = [f"{100 * self.cell(k, m).mean_rate:.1f}" for m in methods]
            lines.append(f"{k}\t" + "\t".join(row))
        return "\n".join(lines)


def _fmt(v):
    return repr(float(v)) if np.isfinite(v) else "nan"


def _write_header(buf, cfg):
    for f in dataclasses.fields(cfg):
        buf.write(f"# {f.name}={getattr(cfg, f.name)}\n")


def run_experiment(cfg, ds=None, m_features=None):
    """Run every k_train in ``cfg`` for ``cfg.repeats`` random splits."""
    ds = load_dataset(cfg) if ds is None else ds
    report = Report(cfg)
    for k in cfg.k_train:
        cell = Cell(int(k), cfg.method)
        start = time.perf_counter()
        for r in range(cfg.repeats):
            cell.outcomes.append(run_repeat(cfg, ds, int(k), r, m_features))
        cell.wall_time = time.perf_counter() - start
        log.info("k_train=%d %s: mean rate %.4f (%.1fs)", k, cfg.method, cell.mean_rate, cell.wall_time)
        report.cells.append(cell)
    return report


def run_table1(cfg, ds=None, methods=TABLE1_METHODS):
    """The recognition-rate table: one Report holding every (k_train, method) cell."""
    ds = load_dataset(cfg) if ds is None else ds
    merged = Report(cfg)
    for extractor, classifier in methods:
        sub = dataclasses.replace(cfg, extractor=extractor, classifier=classifier)
        merged.cells.extend(run_experiment(sub, ds).cells)
    return merged


@dataclass
class Curve:
    """A parameter sweep: one (value, mean error) row per swept value."""

    name: str
    config: ExperimentConfig
    values: list = field(default_factory=list)
    cells: list = field(default_factory=list)

    @property
    def failed(self):
        return sum(c.failed for c in self.cells)

    @property
    def errors(self):
        return [1.0 - c.mean_rate for c in self.cells]

    def to_csv(self):
        buf = io.StringIO()
        _write_header(buf, self.config)
        buf.write(f"{self.name},mean_error,stddev,repeats,failed\n")
        for v, c in zip(self.values, self.cells):
            buf.write(f"{_fmt(v)},{_fmt(1.0 - c.mean_rate)},{_fmt(c.stddev)},{len(c.rates)},{c.failed}\n")
        return buf.getvalue()


def sweep_sigma(cfg, sigma2_values, ds=None):
    """Error rate against the SVM RBF scale, first k_train only, shared split seeds."""
    ds = load_dataset(cfg) if ds is None else ds
    k = (cfg.k_train[0],)
    curve = Curve("sigma2", cfg)
    for s2 in sigma2_values:
        if not s2 > 0:
            raise InvalidConfig(f"sigma2 values must be positive, got {s2}")
        sub = dataclasses.replace(cfg, svm_sigma2=float(s2), k_train=k)
        curve.values.append(float(s2))
        curve.cells.append(run_experiment(sub, ds).cells[0])
    return curve


def sweep_m(cfg, m_values, ds=None):
    """Error rate against the number of extracted features, first k_train only."""
    ds = load_dataset(cfg) if ds is None else ds
    limit = ds.n_classes - 1
    for m in m_values:
        if int(m) != m or m < 1 or (cfg.extractor == "kdda" and m > limit):
            raise InvalidConfig(f"M={m} outside the valid range 1..{limit} for {ds.n_classes} classes")
    k = (cfg.k_train[0],)
    curve = Curve("m_features", cfg)
    for m in m_values:
        sub = dataclasses.replace(cfg, m_features=int(m), k_train=k)
        curve.values.append(int(m))
        curve.cells.append(run_experiment(sub, ds).cells[0])
    return curve


def emit_boundary_grid(model, predict, bounds, resolution):
    """CSV of classifier predictions over a regular 2-D grid.

    ``bounds`` is (xmin, xmax, ymin, ymax); ``resolution`` an int or (nx, ny).
    """
    dim = getattr(model, "dim", None)
    if dim is None:
        dim = model.features.shape[1]
    if dim != 2:
        raise InvalidConfig(f"boundary grids need a 2-D feature space, model has {dim}")
    nx, ny = (resolution, resolution) if np.isscalar(resolution) else resolution
    if nx < 1 or ny < 1:
        raise InvalidConfig("resolution must be positive")
    xmin, xmax, ymin, ymax = bounds
    xs = np.linspace(xmin, xmax, int(nx))
    ys = np.linspace(ymin, ymax, int(ny))
    gx, gy = np.meshgrid(xs, ys)
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    labels = np.atleast_1d(predict(model, pts))
    buf = io.StringIO()
    buf.write("x,y,predicted_class\n")
    for (x, y), c in zip(pts, labels):
        buf.write(f"{_fmt(x)},{_fmt(y)},{int(c)}\n")
    return buf.getvalue()


def run_boundary(cfg, ds=None):
    """Fit an M=2 pipeline on the first ``boundary_classes`` classes (repeat 0).

    Returns ``(grid_csv, train_csv)``; the second lists the training features.
    """
    ds = load_dataset(cfg) if ds is None else ds
    keep = np.flatnonzero(ds.labels <= cfg.boundary_classes)
    ds = ds.subset(keep)
    cfg = dataclasses.replace(cfg, m_features=2)
    tr_idx, te_idx = split_indices(ds, SplitSpec(cfg.k_train[0], seed=cfg.seed, repeat=0))
    train, test = ds.subset(tr_idx), ds.subset(te_idx)
    f_train, _ = extract(cfg, train, test, kernel=extractor_kernel(cfg, train))
    if f_train.shape[1] != 2:
        raise InvalidConfig(f"extractor produced {f_train.shape[1]} features, boundary needs 2")
    svm_cfg = None
    if cfg.classifier != "nn":
        svm_cfg = _svm_config(cfg, *tune_svm(cfg, f_train, train.labels))
    model, predict = _train_classifier(cfg.classifier, f_train, train.labels, svm_cfg)
    lo, hi = f_train.min(axis=0), f_train.max(axis=0)
    pad = 0.1 * np.maximum(hi - lo, 1e-12)
    bounds = (lo[0] - pad[0], hi[0] + pad[0], lo[1] - pad[1], hi[1] + pad[1])
    grid = emit_boundary_grid(model, predict, bounds, cfg.boundary_resolution)
    rows = ["x,y,label"] + [f"{_fmt(a)},{_fmt(b)},{int(c)}" for (a, b), c in zip(f_train, train.labels)]
    return grid, "\n".join(rows) + "\n"


# --- CLI ----------------------------------------------------------------------

def _values(text, cast):
    return tuple(cast(v) for v in text.split(",") if v.strip())


def main(argv=None):
    parser = argparse.ArgumentParser(prog="kddasvm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("run", "sweep-sigma", "sweep-m", "boundary", "table1"):
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, help="key = value experiment file")
        p.add_argument("--out", type=Path, default=Path("."), help="output directory")
        p.add_argument("--seed", type=int, help="base seed (overrides config)")
        p.add_argument("--repeats", type=int, help="random splits per cell (overrides config)")
        if name.startswith("sweep"):
            p.add_argument("--values", help="comma-separated values to sweep")
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")

    try:
        overrides = {"seed": args.seed, "repeats": args.repeats}
        cfg = load_config(args.config, **overrides) if args.config else ExperimentConfig(
            **{k: v for k, v in overrides.items() if v is not None})
        args.out.mkdir(parents=True, exist_ok=True)
        start = time.perf_counter()
        failed = 0
        if args.command == "run":
            report = run_experiment(cfg)
            (args.out / "report.csv").write_text(report.to_csv())
            (args.out / "repeats.csv").write_text(report.repeats_csv())
            print(report.table())
            failed = report.failed
        elif args.command == "table1":
            report = run_table1(cfg)
            (args.out / "table1.csv").write_text(report.to_csv())
            (args.out / "repeats.csv").write_text(report.repeats_csv())
            print(report.table())
            failed = report.failed
        elif args.command == "sweep-sigma":
            values = _values(args.values, float) if args.values else cfg.sweep_sigma2
            if not values:
                parser.error("no sigma2 values (use --values or sweep_sigma2 in the config)")
            curve = sweep_sigma(cfg, values)
            (args.out / "sigma_curve.csv").write_text(curve.to_csv())
            failed = curve.failed
        elif args.command == "sweep-m":
            values = _values(args.values, int) if args.values else cfg.sweep_m
            if not values:
                parser.error("no M values (use --values or sweep_m in the config)")
            curve = sweep_m(cfg, values)
            (args.out / "m_curve.csv").write_text(curve.to_csv())
            failed = curve.failed
        else:
            grid, train = run_boundary(cfg)
            (args.out / "boundary.csv").write_text(grid)
            (args.out / "boundary_train.csv").write_text(train)
        print(f"elapsed {time.perf_counter() - start:.1f}s", file=sys.stderr)
    except KddaSvmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
