"""Python access to the twinrow library.

Values come back as the JSON documents the command-line tool emits with
``--format json``; Schur expansions are ``{partition tuple: int}`` dicts.
"""

import json

from ._core import (
    D1,
    D2,
    G_hook_sum,
    Z_hook_sum,
    character_z,
    cli,
    conjugate,
    from_frobenius,
    to_frobenius,
)

__all__ = [
    "D1",
    "D2",
    "G_hook_sum",
    "TwinrowError",
    "Z_hook_sum",
    "character_z",
    "cli",
    "compute",
    "conjugate",
    "from_frobenius",
    "to_frobenius",
    "verify",
]


class TwinrowError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(f"exit {code}: {message.strip()}")
        self.code = code


def _args(command, n, order, basis=None, su_specialize=False, partition=None):
    args = [command, "--n", str(n), "--format", "json"]
    if order is not None:
        args += ["--order", str(order)]
    if basis is not None:
        args += ["--basis", basis]
    if su_specialize:
        args.append("--su-specialize")
    if partition is not None:
        args += ["--partition", ",".join(str(p) for p in partition)]
    return args


def compute(command, n, order=None, basis="z", su_specialize=False, partition=None):
    """Coefficients of char, f, g, F, Z or G as the CLI JSON document."""
    code, out, err = cli(_args(command, n, order, basis, su_specialize, partition))
    if code != 0:
        raise TwinrowError(code, err)
    return json.loads(out)


def verify(n, order=None):
    """Run the verification suite; returns the report document (``ok`` is False on any failure)."""
    code, out, err = cli(_args("verify", n, order))
    if code not in (0, 1):
        raise TwinrowError(code, err)
    return json.loads(out)
