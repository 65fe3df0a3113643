#!/usr/bin/env python3
"""Independent oracle for frozen test values.

Brute force / direct evaluation only; shares no code with the C++ library.
Run: python3 tests/oracles/derive_values.py
"""
import numpy as np


def bayes(prior, s_h, s_l, msg):
    # s_h = P(msgH | high), s_l = P(msgH | low)
    if msg == "H":
        den = prior * s_h + (1 - prior) * s_l
        return None if den == 0 else prior * s_h / den
    den = prior * (1 - s_h) + (1 - prior) * (1 - s_l)
    return None if den == 0 else (1 - prior) * (1 - s_l) / den


def receiver_u(a, p, lam, msg):
    extra = lam * a if msg == "H" else lam * (1 - a)
    return p * (1 - (1 - a) ** 2) + (1 - p) * (1 - a * a) + extra


def grid_argmax(p, lam, msg, step=1e-6):
    grid = np.arange(0, 1 + step / 2, step)
    vals = receiver_u(grid, p, lam, msg)
    return grid[np.argmax(vals)]


print("bayes .5/.8/.6 H", bayes(0.5, 0.8, 0.4, "H"))
print("bayes .5/.8/.6 L", bayes(0.5, 0.8, 0.4, "L"))
print("argmax truthful L lam .114", grid_argmax(1.0, 0.114, "L"))
print("U(.943,1,.114,L)", receiver_u(0.943, 1.0, 0.114, "L"))
print("uninformative lam .3 H/L", grid_argmax(0.5, 0.3, "H"), grid_argmax(0.5, 0.3, "L"))

# Mixed BNE footnote: direct sender utilities in the mixing state.
pi, tau, gamma = 0.587, 1.0, 10.0
r = tau / gamma
q = (1 - pi - r) / ((1 - pi) * (1 - r))
post_h = pi / (pi + (1 - pi) * (1 - q))
print("mix q", q, "posterior(x_H)", post_h, "footnote a(x_H)", 1 - r)
print("theta_L: u(x_L)", tau + gamma * 1.0, "u(x_H)", gamma * (1 - r))


# Brute-force motivated equilibria: enumerate perceived x actual pure rules.
RULES = {"sep": (1, 0), "poolH": (1, 1), "poolL": (0, 0), "anti": (0, 1)}
ROW = {("sep", "sep"): 1, ("poolH", "poolH"): 2, ("poolL", "poolL"): 3,
       ("sep", "poolH"): 4, ("poolL", "sep"): 5, ("poolL", "poolH"): 6}


def family(prior, rule, bias, off=0.0):
    s_h, s_l = RULES[rule]
    out = {}
    for m in "HL":
        b = bayes(prior, s_h, s_l, m)
        if b is None:
            out[m] = off
        elif m == "H":
            out[m] = min(bias / 2 + b, 1.0)
        else:
            out[m] = max(-bias / 2 + b, 0.0)
    return out


def is_br(rule, ratings, tau, gamma):
    s_h, s_l = RULES[rule]
    for state, sends_h in (("H", s_h), ("L", s_l)):
        u = {m: gamma * ratings[m] + (tau if m == state else 0.0) for m in "HL"}
        chosen = "H" if sends_h else "L"
        if u[chosen] < max(u.values()) - 1e-12:
            return False
    return True


def me_rows(prior, tau, gamma, lr, ls):
    rows = set()
    for p in RULES:
        if not is_br(p, family(prior, p, lr), tau, gamma):
            continue
        for a in RULES:
            if is_br(a, family(prior, p, ls), tau, gamma):
                rows.add(ROW.get((p, a), 0))
    return sorted(rows)


for g in (10, 3, 20):
    print("ME rows gamma", g, me_rows(0.587, 1.0, g, 0.114, 0.30))


def scan(row, lr, ls, lo=0.001, hi=40, step=0.0005):
    gs = [g for g in np.arange(lo, hi, step) if row in me_rows(0.587, 1.0, g, lr, ls)]
    return (round(min(gs), 3), round(max(gs), 3)) if gs else None


for row in (1, 2, 3, 4, 5):
    print("panel A row", row, "gamma range", scan(row, 0.114, 0.30))
print("row5 closed form", 1 / (1 - 0.587 - 0.057), 1 / (1 - 0.587 - 0.15))

# Value of information example
pro, anti = 60.3, 48.8
print("info gain", max(pro, anti) - (pro + anti) / 2)

# Quadratic scoring, incentive compatibility check on 0.1 grid
for b in np.arange(0, 1.0001, 0.01):
    grid = np.round(np.arange(0, 1.0001, 0.1), 10)
    ev = b * 100 * (1 - (1 - grid) ** 2) + (1 - b) * 100 * (1 - grid ** 2)
    best = grid[np.argmax(ev)]
    assert abs(best - b) <= 0.05 + 1e-9, (b, best)
print("quadratic IC ok; r=.7 true", 100 * (1 - 0.3 ** 2))
