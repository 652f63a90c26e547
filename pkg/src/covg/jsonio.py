"""Canonical JSON serialization shared by the CLI and the file formats.

Rationals travel as decimal strings "p" or "p/q" in lowest terms; files end
with a newline; key order is insertion order so identical inputs always
produce byte-identical output.
"""

from __future__ import annotations

import hashlib
import json


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads(text):
    return json.loads(text)


def read_json(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def sha256_file(path):
    h = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()
