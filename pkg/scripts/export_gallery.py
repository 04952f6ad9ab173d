"""Write every gallery graph to ``data/<name>.rg``.

    python3 scripts/export_gallery.py [--out data]
"""

import argparse
from pathlib import Path

from topotutte import gallery


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name in gallery.names():
        (out / f"{name}.rg").write_text(gallery.SOURCES[name], encoding="utf-8")
        print(out / f"{name}.rg")


if __name__ == "__main__":
    main()
