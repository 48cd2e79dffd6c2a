# Copyright 2026 The ExpertAudit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Audit expert quotations in news corpora.

Statistics and string similarity are thin wrappers over the C++ core;
`extract` and `audit` run the full pipeline on a JSONL corpus.
"""

import json
import os
import warnings as _warnings
from pathlib import Path
from typing import List, Optional

from . import _core
from ._core import (
    bootstrap,
    gender_ratio,
    gini,
    kruskal_wallis,
    levenshtein,
    segment,
    spearman,
    token_set_similarity,
    welch_t,
)

__all__ = [
    "audit",
    "bootstrap",
    "data_dir",
    "extract",
    "gender_ratio",
    "gini",
    "kruskal_wallis",
    "levenshtein",
    "segment",
    "spearman",
    "token_set_similarity",
    "welch_t",
]


def data_dir() -> str:
    """Directory holding sources.json, gazetteers/ and lexicons/.

    EXPERTAUDIT_DATA overrides; otherwise the copy installed with the
    package, then the source tree's data/ for in-tree builds.
    """
    env = os.environ.get("EXPERTAUDIT_DATA")
    if env:
        return env
    here = Path(__file__).resolve().parent
    for candidate in (here / "data", here.parents[1] / "data", here.parents[2] / "data"):
        if (candidate / "sources.json").is_file():
            return str(candidate)
    raise FileNotFoundError("no data directory found; set EXPERTAUDIT_DATA")


def _emit(messages: List[str]) -> None:
    for m in messages:
        _warnings.warn(m, stacklevel=3)


def extract(corpus: str, *, data: Optional[str] = None, outlet_suppression: bool = True,
            threads: int = 1) -> List[dict]:
    """Expert mentions found in a JSONL corpus, one dict per mention."""
    lines, messages = _core.extract_jsonl(str(corpus), data or data_dir(),
                                          outlet_suppression, threads)
    _emit(messages)
    return [json.loads(line) for line in lines]


def audit(corpus: str, *, out: Optional[str] = None, data: Optional[str] = None,
          formats: str = "json,csv,svg", seed: int = 0, bootstrap: int = 1000,
          bin_width: int = 50, outlet_suppression: bool = True,
          majority_gender: bool = False, threads: int = 1) -> dict:
    """Runs extraction and builds the report; writes files when `out` is set."""
    report, messages = _core.audit_json(
        str(corpus), data or data_dir(), None if out is None else str(out), formats, seed,
        bootstrap, bin_width, outlet_suppression, majority_gender, threads)
    _emit(messages)
    return json.loads(report)
