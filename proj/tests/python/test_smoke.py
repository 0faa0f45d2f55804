# Copyright 2026 The phocs Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import cmath
import math

import pytest

import phocs

TELEPORT = """qubits 1
inputs 0
ALLOC
ALLOC
H 1
CX 1 2
CX 0 1
H 0
M Z0
M Z1
COND X2 IF 1 == 1
COND Z2 IF 0 == 1
COND X0 IF 0 == 1
FREE 0
COND X1 IF 1 == 1
FREE 1
"""


def close(a, b):
    return all(abs(x - y) < 1e-12 for x, y in zip(a, b)) and len(a) == len(b)


def test_pauli_algebra():
    x = phocs.Pauli("X0", 1)
    z = phocs.Pauli("Z0", 1)
    assert not x.commutes(z)
    assert str(x * z) == str(phocs.Pauli("-iY0", 1))
    y = phocs.Pauli("Y0*Y1", 2)
    assert y.is_hermitian()
    assert y.x == [1, 1] and y.z == [1, 1]
    assert phocs.Pauli("X0*X1", 2).commutes(phocs.Pauli("Z0*Z1", 2))


def test_bad_pauli_raises_with_code():
    with pytest.raises(phocs.PhocsError) as info:
        phocs.Pauli("X3", 2)
    assert info.value.code


def test_hadamard_then_measure():
    g = phocs.simulate("qubits 1\nH 0\nM Z0\n")
    assert (g.num_qubits, g.num_outcomes, g.num_params) == (1, 1, 1)
    assert g.half == [True]
    for r in (0, 1):
        assert g.outcomes([r]) == [r]
        amp = [0, 0]
        amp[r] = 1
        # state is |r> up to a phase that must be exactly 1 here
        state = g.state([r])
        assert close([abs(a) for a in state], amp)


def test_exponent_phase_is_exact():
    g = phocs.simulate("qubits 1\nH 0\nEXP + Z0\n")
    w = cmath.exp(1j * math.pi / 4)
    # e^{i pi/4 Z} |+> = (w|0> + conj(w)|1>) / sqrt2
    assert close(g.state([]), [w / math.sqrt(2), w.conjugate() / math.sqrt(2)])


def test_dump_round_trip():
    g = phocs.simulate(TELEPORT.replace("inputs 0\n", ""))
    back = phocs.GeneralForm.load(g.dump())
    assert back == g
    assert g.canonical().is_canonical()


def test_check_named_pairs():
    rot_cx = "qubits 2\ninputs 0 1\nROT t Z0\nCX 0 1\n"
    cx_rot = "qubits 2\ninputs 0 1\nCX 0 1\nROT t Z0\n"
    cx_rot_target = "qubits 2\ninputs 0 1\nCX 0 1\nROT t Z1\n"
    assert phocs.check(rot_cx, cx_rot, oracle=True) == {
        "verdict": "Equivalent",
        "constant_phase": None,
        "witness": None,
        "oracle": "Equivalent",
    }
    assert phocs.check(rot_cx, cx_rot_target)["verdict"] == "NotEquivalent"
    rep = phocs.check("qubits 1\nROT a Z0\n", "qubits 1\nX 0\nROT a Z0\nX 0\n")
    assert rep["verdict"] == "NotEquivalent"
    assert rep["witness"]["angles"] == {"a": 1}


def test_teleportation_is_a_wire():
    rep = phocs.check(TELEPORT, "qubits 1\ninputs 0\nRAND\nRAND\n", oracle=True)
    assert rep["verdict"] == "Equivalent"
    assert rep["oracle"] == "Equivalent"


def test_outcome_map():
    a = "qubits 2\ninputs 0 1\nM X0\nM X1\n"
    b = "qubits 2\ninputs 0 1\nM X1\nM X0\n"
    assert phocs.check(a, b)["verdict"] == "NotEquivalent"
    assert phocs.check(a, b, map="outcome 0 -> 1\noutcome 1 -> 0\n")["verdict"] == "Equivalent"


def test_constant_phase_diagnostic():
    rep = phocs.check("qubits 1\ninputs 0\nEXP - Z0\n", "qubits 1\ninputs 0\nS 0\n")
    assert rep["verdict"] == "NotEquivalent"
    assert rep["constant_phase"] is not None


def test_rotation_count_mismatch():
    with pytest.raises(phocs.PhocsError) as info:
        phocs.check("qubits 1\nROT a Z0\n", "qubits 1\n")
    assert info.value.code == "RotationCountMismatch"


def test_table():
    text = phocs.generate_table()
    assert phocs.verify_table(text) == []
    lines = text.splitlines()
    i = next(k for k, line in enumerate(lines) if line.startswith("m "))
    field = lines[i].split()
    field[1] = "1" if field[1] == "0" else "0"
    lines[i] = " ".join(field)
    assert len(phocs.verify_table("\n".join(lines) + "\n")) == 1


def test_selfcheck():
    suites = phocs.selfcheck(seed=3, iters=20, jobs=2)
    assert [s["name"] for s in suites] == ["simulate", "exponent", "orbit", "equivalence"]
    assert all(s["failures"] == 0 and s["cases"] == 20 for s in suites)
