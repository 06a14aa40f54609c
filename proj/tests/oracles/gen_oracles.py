# Copyright 2026 The wishart-reals Authors
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

"""High-precision reference values frozen into the unit tests.

Run with python3 (needs mpmath). Every number printed here appears
verbatim in one of the tests/*.cpp files.
"""
import mpmath as mp

mp.mp.dps = 40


def show(label, v):
    print(f"{label} = {mp.nstr(v, 20)}")


def lag(n, a, x):
    # explicit finite sum, stable at this precision for the sizes used here
    return mp.fsum(mp.binomial(n + a, n - k) * (-x) ** k / mp.factorial(k) for k in range(n + 1))


print("# special functions")
for x in ["0.5", "10.3", "170.5"]:
    show(f"lgamma({x})", mp.loggamma(mp.mpf(x)))
for nu, z in [("0", "0.001"), ("0.5", "0.5"), ("1.3", "1"), ("2", "1"), ("3.5", "2"), ("10.25", "5"),
              ("0.75", "30"), ("4", "200")]:
    show(f"ln K_{nu}({z})", mp.log(mp.besselk(mp.mpf(nu), mp.mpf(z))))
for nu, z in [("0", "0.5"), ("1", "0.5"), ("0", "40"), ("1", "40"), ("2.5", "3"), ("7", "0.1")]:
    show(f"ln I_{nu}({z})", mp.log(mp.besseli(mp.mpf(nu), mp.mpf(z))))
for n, a, x in [(30, "2.5", "17.3"), (100, "0", "50"), (60, "60", "300"), (40, "0.25", "-3")]:
    v = lag(n, mp.mpf(a), mp.mpf(x))
    show(f"L_{n}^({a})({x}) sign", mp.sign(v))
    show(f"L_{n}^({a})({x}) lnabs", mp.log(abs(v)))
show("erf(1)", mp.erf(1))
show("erfc(3)", mp.erfc(3))
show("2F1(1/4,1/2;3/2;-7.3)", mp.hyp2f1(0.25, 0.5, 1.5, mp.mpf("-7.3")))
show("2F1(1,2;3.5;0.6)", mp.hyp2f1(1, 2, 3.5, mp.mpf("0.6")))
show("I_0.49(19,21)", mp.betainc(19, 21, 0, mp.mpf("0.49"), regularized=True))
show("I_0.25(2,3)", mp.betainc(2, 3, 0, mp.mpf("0.25"), regularized=True))

print("# real kernel, N=4 nu=1 tau=0.5")
N, nu, tau = 4, mp.mpf(1), mp.mpf("0.5")
a = 1 / (1 - tau ** 2)


def w(v):
    if v == 0:
        return mp.gamma(nu / 2) / 2 * (2 / a) ** (nu / 2)
    return abs(v) ** (nu / 2) * mp.besselk(nu / 2, abs(v) * a) * mp.exp(tau * v * a)


def p(j, x):
    if j % 2 == 0:
        return tau ** j * mp.factorial(j) * lag(j, nu, x / tau)
    k = j - 1
    out = -tau ** (k + 1) * mp.factorial(k + 1) * lag(k + 1, nu, x / tau)
    if k >= 1:
        out += tau ** (k - 1) * mp.factorial(k) * (k + nu) * lag(k - 1, nu, x / tau)
    return out


def r(j):
    return 2 * mp.pi * (1 - tau ** 2) * mp.gamma(2 * j + 1) * mp.gamma(2 * j + 1 + nu)


def phi(j, y):
    f = lambda v: w(v) * p(j, v)
    pts = sorted({mp.mpf(0), mp.mpf(y)})
    below = mp.quad(f, [-mp.inf] + [t for t in pts if t <= y])
    above = mp.quad(f, [t for t in pts if t >= y] + [mp.inf])
    return below - above


def S(x, y):
    return w(x) * mp.fsum((p(2 * j + 1, x) * phi(2 * j, y) - p(2 * j, x) * phi(2 * j + 1, y)) / r(j)
                          for j in range(N // 2))


show("w(0.7)", w(mp.mpf("0.7")))
show("w(0)", w(0))
show("p_3(0.7)", p(3, mp.mpf("0.7")))
show("Phi_1(-1.2)", phi(1, mp.mpf("-1.2")))
show("S(0.7,-1.2)", S(mp.mpf("0.7"), mp.mpf("-1.2")))
show("S(-1.2,0.7)", S(mp.mpf("-1.2"), mp.mpf("0.7")))
show("R(2.5)", S(mp.mpf("2.5"), mp.mpf("2.5")))

print("# complex kernel, N=10 nu=1.5 tau=0.4")
Nc, nuc, tc = 10, mp.mpf("1.5"), mp.mpf("0.4")
Kc = mp.fsum(mp.factorial(j) * tc ** (2 * j) / mp.gamma(j + nuc + 1) * lag(j, nuc, mp.mpf("3.1") / tc)
             * lag(j, nuc, mp.mpf("-0.8") / tc) for j in range(Nc))
show("K_10(3.1,-0.8)", Kc)

print("# limits")
show("c(0.5,1)", mp.quad(lambda x: (x ** 2 + (mp.mpf(3) / 8) ** 2) ** mp.mpf(-0.25),
                         [mp.mpf(3) * 0.5 - mp.mpf(1.25) * mp.sqrt(2), 0, mp.mpf(3) * 0.5 + mp.mpf(1.25) * mp.sqrt(2)]))
for al in ["0.1", "1", "3", "6"]:
    z = mp.mpf(al) ** 2 / 2
    show(f"c_weak({al})", mp.exp(-z) * (mp.besseli(0, z) + mp.besseli(1, z)))
