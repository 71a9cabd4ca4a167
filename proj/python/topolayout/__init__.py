# Copyright 2026 The topolayout Authors.
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

"""Topology-preserving 2D projection of point clouds."""

import json

import numpy as np

from ._core import (
    Hierarchy,
    SpanningTree,
    TopolayoutError,
    amst,
    bottleneck_distance,
    exact_emst,
    hierarchy,
    resolve_eta,
    wasserstein_distance,
)
from . import _core

__all__ = [
    "Hierarchy",
    "SpanningTree",
    "TopolayoutError",
    "amst",
    "bottleneck_distance",
    "exact_emst",
    "hierarchy",
    "metrics_report",
    "project",
    "project_points",
    "resolve_eta",
    "wasserstein_distance",
]


def project(tree, hier, selected=None, c=2.0, alpha_max=float("inf")):
    """Return (coords, layout document) for a tree and its hierarchy."""
    coords, doc = _core.project(tree, hier, selected, c, alpha_max)
    return coords, json.loads(doc)


def metrics_report(approx, exact, order=1.0, normalized=False, ground_metric="linf"):
    return json.loads(_core.metrics_report(approx, exact, order, normalized, ground_metric))


def project_points(points, eta="1%", mst="exact", c=2.0, alpha_max=float("inf"), **vamana):
    """Project an (n, d) array; all components of interest are highlighted."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    tree = exact_emst(points) if mst == "exact" else amst(points, **vamana)
    hier = hierarchy(tree, resolve_eta(str(eta), points.shape[0]))
    coords, _ = project(tree, hier, None, c, alpha_max)
    return coords
