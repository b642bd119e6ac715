"""Frozen expected values shared between the unit and acceptance tests.

Coincidence families are given as words in the generators; tests parse
them to window form before comparing, so the lists are insensitive to the
reading direction of words (every family is closed under inversion).
"""

# GL_2, split Frobenius: class of every w, as {label word: q-poly string}
GL2_CLASSES = {
    "id": {"id": "q+1"},
    "s1": {"s1": "1"},
}

# GL_3, split Frobenius
GL3_CLASSES_TRIVIAL = {
    "id": {"id": "q^3+2*q^2+2*q+1"},
    "s1": {"s1": "q^2+q+1"},
    "s2": {"s2": "q^2+q+1"},
    "s1 s2": {"s1 s2": "q", "s2 s1": "1"},
    "s2 s1": {"s1 s2": "1", "s2 s1": "q"},
    "s1 s2 s1": {"s1 s2 s1": "1"},
}

# GL_3, Frobenius acting by conjugation with the longest element
GL3_CLASSES_W0 = {
    "id": {"id": "q^3+1"},
    "s1": {"s1": "q+1", "s2": "q^2+q"},
    "s2": {"s1": "q^2+q", "s2": "q+1"},
    "s1 s2": {"s2 s1": "q+1"},
    "s2 s1": {"s1 s2": "q+1"},
    "s1 s2 s1": {"s1 s2 s1": "1"},
}

# expected coincidence families of the regular semisimple classes
S4_FAMILIES = [
    ["s1 s2", "s2 s1"],
    ["s2 s3", "s3 s2"],
    ["s3 s1 s2", "s2 s3 s1", "s3 s2 s1", "s1 s2 s3"],
    ["s1 s2 s3 s1", "s3 s1 s2 s1"],
    ["s1 s2 s3 s2", "s2 s3 s2 s1"],
    ["s2 s3 s1 s2 s1", "s1 s2 s3 s1 s2"],
]

S5_FAMILIES = [
    ["s2 s1", "s1 s2"],
    ["s3 s2", "s2 s3"],
    ["s3 s4", "s4 s3"],
    ["s3 s4 s1", "s4 s3 s1"],
    ["s4 s2 s1", "s4 s1 s2"],
    ["s3 s2 s1", "s2 s3 s1", "s3 s1 s2", "s1 s2 s3"],
    ["s3 s4 s2", "s2 s3 s4", "s4 s3 s2", "s4 s2 s3"],
    ["s2 s3 s4 s2", "s4 s2 s3 s2"],
    ["s3 s1 s2 s1", "s1 s2 s3 s1"],
    ["s2 s3 s2 s1", "s1 s2 s3 s2"],
    ["s3 s4 s3 s2", "s2 s3 s4 s3"],
    [
        "s3 s4 s2 s1", "s2 s3 s4 s1", "s4 s3 s2 s1", "s4 s2 s3 s1",
        "s3 s4 s1 s2", "s1 s2 s3 s4", "s4 s3 s1 s2", "s4 s1 s2 s3",
    ],
    ["s2 s3 s1 s2 s1", "s1 s2 s3 s1 s2"],
    ["s3 s4 s2 s3 s1", "s3 s4 s1 s2 s3"],
    ["s2 s3 s4 s1 s2", "s4 s2 s3 s1 s2"],
    ["s2 s3 s4 s2 s3", "s3 s4 s2 s3 s2"],
    ["s3 s4 s2 s3 s1 s2", "s2 s3 s4 s1 s2 s3"],
    ["s3 s4 s1 s2 s1", "s1 s2 s3 s4 s1", "s4 s3 s1 s2 s1", "s4 s1 s2 s3 s1"],
    ["s2 s3 s4 s2 s1", "s4 s2 s3 s2 s1", "s1 s2 s3 s4 s2", "s4 s1 s2 s3 s2"],
    ["s3 s4 s3 s2 s1", "s2 s3 s4 s3 s1", "s3 s4 s3 s1 s2", "s1 s2 s3 s4 s3"],
    ["s1 s2 s3 s4 s2 s1", "s4 s1 s2 s3 s2 s1"],
    ["s2 s3 s4 s3 s2 s1", "s1 s2 s3 s4 s3 s2"],
    ["s3 s4 s3 s1 s2 s1", "s1 s2 s3 s4 s3 s1"],
    ["s2 s3 s4 s2 s3 s1", "s3 s4 s2 s3 s2 s1", "s1 s2 s3 s4 s2 s3", "s3 s4 s1 s2 s3 s2"],
    ["s2 s3 s4 s1 s2 s1", "s4 s2 s3 s1 s2 s1", "s1 s2 s3 s4 s1 s2", "s4 s1 s2 s3 s1 s2"],
    ["s2 s3 s4 s2 s3 s1 s2", "s2 s3 s4 s1 s2 s3 s2"],
    ["s2 s3 s4 s3 s1 s2 s1", "s1 s2 s3 s4 s3 s1 s2"],
    ["s1 s2 s3 s4 s1 s2 s1", "s4 s1 s2 s3 s1 s2 s1"],
    ["s1 s2 s3 s4 s2 s3 s1", "s3 s4 s1 s2 s3 s2 s1"],
    ["s2 s3 s4 s1 s2 s3 s1", "s3 s4 s1 s2 s3 s1 s2"],
    ["s3 s4 s2 s3 s1 s2 s1", "s1 s2 s3 s4 s1 s2 s3"],
    ["s2 s3 s4 s2 s3 s2 s1", "s1 s2 s3 s4 s2 s3 s2"],
    ["s2 s3 s4 s2 s3 s1 s2 s1", "s1 s2 s3 s4 s1 s2 s3 s2"],
    ["s2 s3 s4 s1 s2 s3 s2 s1", "s1 s2 s3 s4 s2 s3 s1 s2"],
    ["s1 s2 s3 s4 s1 s2 s3 s1", "s3 s4 s1 s2 s3 s1 s2 s1"],
    ["s2 s3 s4 s1 s2 s3 s1 s2 s1", "s1 s2 s3 s4 s1 s2 s3 s1 s2"],
    ["s1 s2 s3 s4 s2 s3 s1 s2 s1", "s1 s2 s3 s4 s1 s2 s3 s2 s1"],
]

# the six S_6 families not explained by inversion or factor swaps
S6_EXCEPTIONAL_FAMILIES = [
    [
        "s1 s2 s3 s4 s5 s3 s4 s1 s2",
        "s2 s3 s4 s5 s3 s4 s1 s2 s1",
        "s4 s5 s2 s3 s4 s3 s1 s2 s1",
        "s4 s5 s1 s2 s3 s4 s3 s1 s2",
    ],
    [
        "s2 s3 s4 s5 s2 s3 s4 s1 s2 s1",
        "s1 s2 s3 s4 s5 s1 s2 s3 s4 s2",
        "s4 s5 s1 s2 s3 s4 s1 s2 s3 s2",
        "s4 s5 s2 s3 s4 s2 s3 s1 s2 s1",
    ],
    [
        "s2 s3 s4 s5 s1 s2 s3 s4 s1 s2 s3",
        "s2 s3 s4 s5 s2 s3 s4 s1 s2 s3 s1",
        "s3 s4 s5 s2 s3 s4 s1 s2 s3 s1 s2",
        "s3 s4 s5 s1 s2 s3 s4 s1 s2 s3 s2",
    ],
    [
        "s1 s2 s3 s4 s5 s1 s2 s3 s4 s2 s1",
        "s1 s2 s3 s4 s5 s2 s3 s4 s1 s2 s1",
        "s4 s5 s1 s2 s3 s4 s1 s2 s3 s2 s1",
        "s4 s5 s1 s2 s3 s4 s2 s3 s1 s2 s1",
    ],
    [
        "s2 s3 s4 s5 s3 s4 s2 s3 s1 s2 s1",
        "s2 s3 s4 s5 s2 s3 s4 s3 s1 s2 s1",
        "s1 s2 s3 s4 s5 s3 s4 s1 s2 s3 s2",
        "s1 s2 s3 s4 s5 s1 s2 s3 s4 s3 s2",
    ],
    [
        "s1 s2 s3 s4 s5 s3 s4 s1 s2 s3 s2 s1",
        "s1 s2 s3 s4 s5 s1 s2 s3 s4 s3 s2 s1",
        "s1 s2 s3 s4 s5 s3 s4 s2 s3 s1 s2 s1",
        "s1 s2 s3 s4 s5 s2 s3 s4 s3 s1 s2 s1",
    ],
]


def parse_families(families, n):
    from dlchow import permgroup as pg

    return {frozenset(pg.parse_perm(word, n) for word in family) for family in families}
