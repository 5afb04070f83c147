"""Python access to the lbverify core."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, run_cli


def main(argv=None):
    import sys

    code, out, err = run_cli(list(sys.argv[1:] if argv is None else argv))
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
