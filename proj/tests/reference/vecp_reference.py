#!/usr/bin/env python3
# Copyright 2026 The lpopt Authors
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
"""Reference values for the vector relaxation, from a generic conic solver.

Prints one line per instance: name, p, value. The C++ unit tests freeze these
numbers; rerun this script after changing an instance.
"""

import cvxpy as cp
import numpy as np


def vecp(b, p):
    m, n = b.shape
    x = cp.Variable((m + n, m + n), PSD=True)
    cons = []
    for block in (range(m), range(m, m + n)):
        diag = cp.hstack([x[i, i] for i in block])
        if p == np.inf:
            cons.append(diag <= 1)
        else:
            cons.append(cp.pnorm(diag, p / 2) <= 1)
    obj = cp.Maximize(cp.sum(cp.multiply(b, x[:m, m:])))
    prob = cp.Problem(obj, cons)
    prob.solve(solver=cp.CLARABEL, tol_gap_abs=1e-10, tol_gap_rel=1e-10,
               tol_feas=1e-10)
    return prob.value


INSTANCES = {
    "hadamard2": np.array([[1.0, 1.0], [1.0, -1.0]]),
    "diag21": np.array([[2.0, 0.0], [0.0, 1.0]]),
    "swap": np.array([[0.0, 1.0], [1.0, 0.0]]),
    "mixed23": np.array([[1.0, -2.0, 0.5], [0.3, 1.0, -1.0]]),
    "rot3": np.array([[1.0, 2.0, 0.0], [0.0, 1.0, 2.0], [2.0, 0.0, 1.0]]),
}

if __name__ == "__main__":
    for name, b in INSTANCES.items():
        for p in (3.0, 4.0, np.inf):
            print(f"{name} {p} {vecp(b, p):.10f}")
