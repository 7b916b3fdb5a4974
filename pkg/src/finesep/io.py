"""JSON serialisation of states, kets, POVMs, MUB/MUM sets and partitions.

Complex numbers are ``[re, im]`` pairs, matrices nested row-major lists.
Python's float repr is the shortest round-trip form, so ``load(dump(x))``
reproduces every double bit for bit.
"""

import json

import numpy as np

from .composer import has_intersecting_pairs, make_partition
from .measurements import MubSet, MumSet, Povm, mub_residuals, mum_residuals, povm_residuals
from .states import DensityMatrix, state_residuals

KINDS = ("state", "ket", "povm", "suite", "mubset", "mumset", "partition")


class FileFormatError(ValueError):
    pass


def encode_array(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 0:
        return [float(a.real), float(a.imag)]
    return [encode_array(x) for x in a]


def decode_array(obj, ndim):
    arr = np.asarray(obj, dtype=float)
    if arr.ndim != ndim + 1 or arr.shape[-1] != 2:
        raise FileFormatError(f"expected a {ndim}-d array of [re, im] pairs, got shape {arr.shape}")
    return arr[..., 0] + 1j * arr[..., 1]


def _povm_obj(p, name=None):
    obj = {
        "dim": p.dim,
        "dims": list(p.dims),
        "labels": list(p.labels),
        "elements": encode_array(p.elements),
    }
    if name is not None:
        obj["name"] = name
    return obj


def to_json(x, kind=None, **extra):
    """Serialisable dict for a library object; ``extra`` keys are merged in."""
    if isinstance(x, DensityMatrix):
        obj = {"kind": "state", "dims": list(x.dims), "matrix": encode_array(x.matrix)}
    elif isinstance(x, Povm):
        obj = {"kind": "povm", **_povm_obj(x, extra.pop("name", None))}
    elif isinstance(x, MubSet):
        obj = {"kind": "mubset", "dim": x.dim, "bases": encode_array(x.bases)}
    elif isinstance(x, MumSet):
        obj = {
            "kind": "mumset",
            "dim": x.dim,
            "kappa": x.kappa,
            "povms": [_povm_obj(p) for p in x.povms],
        }
    elif kind == "ket":
        v = np.asarray(x, dtype=complex)
        obj = {"kind": "ket", "dims": list(extra.pop("dims", (v.shape[0], 1))), "amplitudes": encode_array(v)}
    elif kind == "suite":
        names = extra.pop("names", None) or [None] * len(x)
        obj = {"kind": "suite", "dims": list(x[0].dims), "povms": [_povm_obj(p, n) for p, n in zip(x, names)]}
    elif hasattr(x, "subsets"):
        obj = {"kind": "partition", "shape": list(x.shape), "subsets": [[list(p) for p in s] for s in x.subsets]}
    else:
        raise TypeError(f"cannot serialise {type(x).__name__}")
    obj.update(extra)
    return obj


def dumps(x, kind=None, **extra):
    return json.dumps(to_json(x, kind, **extra), indent=1)


def dump(x, path, kind=None, **extra):
    with open(path, "w") as fh:
        fh.write(dumps(x, kind, **extra))
        fh.write("\n")


def read_raw(path):
    """Parse a file into a dict, checking only JSON syntax and the kind tag."""
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    if not isinstance(obj, dict) or obj.get("kind") not in KINDS:
        raise FileFormatError(f"{path}: missing or unknown 'kind'")
    return obj


def _decode_povm(obj):
    try:
        return decode_array(obj["elements"], 3), obj.get("labels"), obj.get("dims")
    except KeyError as exc:
        raise FileFormatError(f"missing field {exc}") from exc


def residuals(obj):
    """Per-invariant residuals for a raw file object, without raising on failure."""
    kind = obj["kind"]
    try:
        if kind == "state":
            return state_residuals(decode_array(obj["matrix"], 2))
        if kind == "ket":
            v = decode_array(obj["amplitudes"], 1)
            return {"norm": abs(float(np.linalg.norm(v)) - 1.0)}
        if kind == "povm":
            return povm_residuals(_decode_povm(obj)[0])
        if kind == "suite":
            out = {}
            for t, p in enumerate(obj["povms"]):
                for k, v in povm_residuals(_decode_povm(p)[0]).items():
                    out[f"{t}.{k}"] = v
            return out
        if kind == "mubset":
            return mub_residuals(decode_array(obj["bases"], 3))
        if kind == "mumset":
            povms = [_decode_povm(p)[0] for p in obj["povms"]]
            res = {}
            for t, e in enumerate(povms):
                for k, v in povm_residuals(e).items():
                    res[f"povm{t}.{k}"] = v
            res.update(mum_residuals(povms, float(obj["kappa"])))
            return res
        if kind == "partition":
            m, n = obj["shape"]
            pairs = [tuple(p) for s in obj["subsets"] for p in s]
            cover = set(pairs) == {(i, j) for i in range(m) for j in range(n)} and len(pairs) == m * n
            matching = not any(has_intersecting_pairs([tuple(p) for p in s]) for s in obj["subsets"])
            return {"partition": 0.0 if cover else 1.0, "non_intersecting": 0.0 if matching else 1.0}
    except (KeyError, TypeError, ValueError) as exc:
        raise FileFormatError(f"malformed {kind} file: {exc}") from exc
    raise FileFormatError(f"unknown kind {kind}")


def from_json(obj):
    """Build the library object for a parsed file, validating it."""
    kind = obj["kind"]
    try:
        if kind == "state":
            return DensityMatrix(decode_array(obj["matrix"], 2), tuple(obj["dims"]))
        if kind == "ket":
            return decode_array(obj["amplitudes"], 1)
        if kind == "povm":
            e, labels, dims = _decode_povm(obj)
            return Povm(e, labels, tuple(dims) if dims else None)
        if kind == "suite":
            return [from_json({"kind": "povm", **p}) for p in obj["povms"]]
        if kind == "mubset":
            return MubSet(decode_array(obj["bases"], 3))
        if kind == "mumset":
            povms = tuple(from_json({"kind": "povm", **p}) for p in obj["povms"])
            return MumSet(povms, float(obj["kappa"]))
        if kind == "partition":
            return make_partition(obj["shape"], obj["subsets"], enforce=obj.get("enforce", True))
    except (KeyError, TypeError) as exc:
        raise FileFormatError(f"malformed {kind} file: {exc}") from exc
    raise FileFormatError(f"unknown kind {kind}")


def load(path):
    return from_json(read_raw(path))


def suite_names_of(obj):
    if obj["kind"] == "suite":
        return [p.get("name") for p in obj["povms"]]
    return [obj.get("name")]
