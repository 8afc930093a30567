"""Image datasets (PGM), per-class random splits and synthetic generators.

Randomness comes from numpy's ``Generator`` over the PCG64 bit generator,
seeded explicitly, so a given seed produces the same split on every
platform.

Directory layout expected by ``load_image_dir``::

    root/
      subject_a/  img001.pgm img002.pgm ...
      subject_b/  ...

Subdirectories are sorted lexicographically and labelled 1..C.
"""
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from .errors import InvalidConfig, InvalidInput

PGM_SUFFIXES = (".pgm", ".pnm")


@dataclass(frozen=True)
class Dataset:
    samples: np.ndarray  # (L, N)
    labels: np.ndarray  # ints in 1..C
    names: tuple = ()
    width: int = 0
    height: int = 0

    def __post_init__(self):
        if self.samples.ndim != 2 or self.samples.shape[0] != self.labels.size:
            raise InvalidInput("samples and labels disagree in length")

    def __len__(self):
        return int(self.labels.size)

    @property
    def classes(self):
        return np.unique(self.labels)

    @property
    def n_classes(self):
        return int(self.classes.size)

    def class_sizes(self):
        cls, counts = np.unique(self.labels, return_counts=True)
        return dict(zip(cls.tolist(), counts.tolist()))

    def subset(self, index):
        index = np.asarray(index, dtype=int)
        names = tuple(self.names[i] for i in index) if self.names else ()
        return replace(self, samples=self.samples[index], labels=self.labels[index], names=names)


def make_dataset(samples, labels, names=(), width=0, height=0):
    x = np.asarray(samples, dtype=np.float64)
    y = np.asarray(labels, dtype=int).ravel()
    if x.ndim != 2 or x.shape[0] == 0:
        raise InvalidInput("dataset needs a non-empty (L, N) sample array")
    classes = np.unique(y)
    if classes[0] != 1 or classes[-1] != classes.size:
        raise InvalidInput(f"labels must form the contiguous range 1..C, got {classes.tolist()}")
    return Dataset(x, y, tuple(names), width, height)


# --- PGM --------------------------------------------------------------------

def _header_tokens(data, count):
    """Pull ``count`` whitespace-separated header tokens, skipping # comments."""
    tokens = []
    pos = 2
    n = len(data)
    while len(tokens) < count:
        while pos < n and data[pos:pos + 1].isspace():
            pos += 1
        if pos >= n:
            raise ValueError("truncated header")
        if data[pos:pos + 1] == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < n and not data[pos:pos + 1].isspace() and data[pos:pos + 1] != b"#":
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def read_pgm(path):
    """Read a P2 or P5 graymap.

    Returns ``(pixels, maxval)`` where pixels is an (height, width) integer array.
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise InvalidInput(f"{path}: cannot read ({exc.strerror})") from exc
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise InvalidInput(f"{path}: not a PGM file (magic {magic!r})")
    try:
        tokens, pos = _header_tokens(data, 3)
        width, height, maxval = (int(t) for t in tokens)
    except ValueError as exc:
        raise InvalidInput(f"{path}: malformed header") from exc
    if width < 1 or height < 1 or not 0 < maxval <= 65535:
        raise InvalidInput(f"{path}: invalid header values {width}x{height} maxval {maxval}")
    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        raster = data[pos + 1:]
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype("u1")
        if len(raster) < count * dtype.itemsize:
            raise InvalidInput(f"{path}: raster truncated")
        pixels = np.frombuffer(raster, dtype=dtype, count=count).astype(np.int64)
    else:
        text = b"\n".join(line.split(b"#", 1)[0] for line in data[pos:].splitlines())
        try:
            values = [int(v) for v in text.split()]
        except ValueError as exc:
            raise InvalidInput(f"{path}: non-integer pixel value") from exc
        if len(values) < count:
            raise InvalidInput(f"{path}: raster truncated")
        pixels = np.asarray(values[:count], dtype=np.int64)
    if pixels.max(initial=0) > maxval:
        raise InvalidInput(f"{path}: pixel exceeds maxval {maxval}")
    return pixels.reshape(height, width), maxval


def write_pgm(path, pixels, maxval=255, binary=False):
    pixels = np.asarray(pixels)
    if pixels.ndim != 2:
        raise InvalidInput("pixels must be a 2-D array")
    if pixels.min(initial=0) < 0 or pixels.max(initial=0) > maxval:
        raise InvalidInput("pixel values out of range")
    height, width = pixels.shape
    header = f"{'P5' if binary else 'P2'}\n{width} {height}\n{maxval}\n".encode("ascii")
    if binary:
        dtype = ">u2" if maxval > 255 else "u1"
        body = pixels.astype(dtype).tobytes()
    else:
        body = ("\n".join(" ".join(str(int(v)) for v in row) for row in pixels) + "\n").encode("ascii")
    Path(path).write_bytes(header + body)


def load_image_dir(path, expected_width, expected_height):
    """Load a directory-per-class tree of PGM images, pixels scaled to [0, 1]."""
    root = Path(path)
    if not root.is_dir():
        raise InvalidInput(f"{root}: not a directory")
    class_dirs = sorted(p for p in root.iterdir() if p.is_dir())
    if not class_dirs:
        raise InvalidInput(f"{root}: no class subdirectories")
    samples, labels, names = [], [], []
    for label, cdir in enumerate(class_dirs, start=1):
        files = sorted(f for f in cdir.iterdir() if f.is_file() and f.suffix.lower() in PGM_SUFFIXES)
        if not files:
            raise InvalidInput(f"{cdir}: class directory contains no PGM images")
        for f in files:
            pixels, maxval = read_pgm(f)
            h, w = pixels.shape
            if (w, h) != (expected_width, expected_height):
                raise InvalidInput(
                    f"{f}: image is {w}x{h}, expected {expected_width}x{expected_height}"
                )
            samples.append(pixels.ravel() / float(maxval))
            labels.append(label)
            names.append(f"{cdir.name}/{f.name}")
    return make_dataset(np.vstack(samples), labels, names, expected_width, expected_height)


# --- splitting ----------------------------------------------------------------

@dataclass(frozen=True)
class SplitSpec:
    k_train: int
    seed: int = 0
    repeat: int = 0


def split_indices(ds, spec):
    """Train and test index arrays for a per-class random split.

    Each class's members are permuted by a PCG64 generator seeded with
    ``(seed, repeat)`` and the first ``k_train`` go to training.
    """
    if spec.k_train < 1:
        raise InvalidConfig(f"k_train must be >= 1, got {spec.k_train}")
    for cls, size in ds.class_sizes().items():
        if spec.k_train >= size:
            raise InvalidConfig(
                f"class {cls} has {size} samples; k_train={spec.k_train} leaves none for testing"
            )
    rng = np.random.Generator(np.random.PCG64([spec.seed, spec.repeat]))
    train, test = [], []
    for cls in ds.classes:
        members = np.flatnonzero(ds.labels == cls)
        perm = members[rng.permutation(members.size)]
        train.append(np.sort(perm[:spec.k_train]))
        test.append(np.sort(perm[spec.k_train:]))
    return np.concatenate(train), np.concatenate(test)


def split_per_class(ds, spec):
    train, test = split_indices(ds, spec)
    return ds.subset(train), ds.subset(test)


# --- synthetic data -----------------------------------------------------------

def make_rings(classes, per_class, noise, seed=0):
    """Concentric 2-D rings: class c lies on the circle of radius c."""
    if classes < 2 or per_class < 1:
        raise InvalidConfig("make_rings needs classes >= 2 and per_class >= 1")
    if noise < 0:
        raise InvalidConfig("noise must be non-negative")
    rng = np.random.Generator(np.random.PCG64(seed))
    pts, labels = [], []
    for c in range(1, classes + 1):
        theta = rng.uniform(0.0, 2.0 * np.pi, per_class)
        radius = c + noise * rng.standard_normal(per_class)
        pts.append(np.column_stack([radius * np.cos(theta), radius * np.sin(theta)]))
        labels.append(np.full(per_class, c))
    return make_dataset(np.vstack(pts), np.concatenate(labels))


def make_blobs(classes, per_class, dim=2, spread=0.1, separation=5.0, seed=0):
    """Isotropic Gaussian blobs with centres ``separation`` apart along distinct axes."""
    if classes < 2 or per_class < 1 or dim < 1:
        raise InvalidConfig("make_blobs needs classes >= 2, per_class >= 1, dim >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    pts, labels = [], []
    for c in range(classes):
        centre = np.zeros(dim)
        centre[c % dim] = separation * (1 + c // dim)
        pts.append(centre + spread * rng.standard_normal((per_class, dim)))
        labels.append(np.full(per_class, c + 1))
    return make_dataset(np.vstack(pts), np.concatenate(labels))
