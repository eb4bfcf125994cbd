"""Worked examples frozen as literal inputs and expected terms."""

PRODUCT_LEFT = [[0, 1], [1, 1]]
PRODUCT_RIGHT = [[1, 0], [0, 1]]
PRODUCT_TERMS = [
    [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 0, 1, 0], [1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [1, 0, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]],
    [[0, 0, 1, 0], [0, 1, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1]],
    [[0, 0, 0, 1], [0, 1, 0, 1], [1, 0, 0, 0], [0, 0, 1, 0]],
    [[0, 0, 0, 1], [0, 0, 1, 1], [1, 0, 0, 0], [0, 1, 0, 0]],
]
DENDRIFORM_LEFT_TERMS = PRODUCT_TERMS[2:3] + PRODUCT_TERMS[4:6]
DENDRIFORM_RIGHT_TERMS = PRODUCT_TERMS[0:2] + PRODUCT_TERMS[3:4]

COPRODUCT_INPUT = [[1, 1, 0, 0], [0, 0, 0, 1], [1, 0, 1, 0], [0, 1, 0, 0]]
COPRODUCT_TERMS = [
    (COPRODUCT_INPUT, []),
    ([[1, 1, 0], [1, 0, 1], [0, 1, 0]], [[1]]),
    ([], COPRODUCT_INPUT),
]

ANTIPODE_INPUT = [[0, 1, 1], [1, 0, 0], [0, 1, 0]]
ANTIPODE_TERMS = [
    (1, [[1, 0, 0], [0, 1, 1], [0, 1, 0]]),
    (1, [[0, 1, 0], [1, 0, 1], [1, 0, 0]]),
    (1, [[0, 0, 1], [1, 1, 0], [1, 0, 0]]),
    (-1, [[0, 1, 1], [1, 0, 0], [0, 1, 0]]),
]
ANTIPODE_SQUARED_TERMS = [
    (1, [[1, 1, 0], [1, 0, 0], [0, 0, 1]]),
    (1, [[1, 0, 1], [1, 0, 0], [0, 1, 0]]),
    (1, [[0, 1, 1], [0, 1, 0], [1, 0, 0]]),
    (1, [[0, 1, 1], [1, 0, 0], [0, 1, 0]]),
    (-1, [[1, 0, 0], [0, 1, 1], [0, 1, 0]]),
    (-1, [[0, 1, 0], [1, 0, 1], [1, 0, 0]]),
    (-1, [[0, 0, 1], [1, 1, 0], [1, 0, 0]]),
]

E_INPUT = [[1, 0, 0, 0], [1, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0]]
E_TERMS = [
    E_INPUT,
    [[0, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [1, 0, 0, 0]],
    [[0, 0, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1], [1, 0, 0, 0]],
]
H_INPUT = [[0, 1, 0, 0], [0, 1, 0, 1], [1, 0, 0, 1], [0, 0, 1, 0]]
H_TERMS = [
    H_INPUT,
    [[0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0], [0, 0, 0, 1]],
    [[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 0]],
    [[1, 0, 0, 0], [1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]],
]

DUAL_PRODUCT_TERMS = [
    [[0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    [[0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [0, 0, 0, 1]],
    [[0, 0, 1, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 1]],
    [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]],
    [[0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1], [1, 1, 0, 0]],
    [[0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [1, 1, 0, 0]],
]

DUAL_COPRODUCT_INPUT = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [1, 1, 0, 0]]
# As displayed, the lower row block is written first.
DUAL_COPRODUCT_DISPLAYED = [
    (DUAL_COPRODUCT_INPUT, []),
    ([[1, 0], [1, 1]], [[1, 0], [0, 1]]),
    ([[0, 0, 1], [1, 0, 0], [1, 1, 0]], [[1]]),
    ([], DUAL_COPRODUCT_INPUT),
]

CODENDRIFORM_INPUT = [
    [1, 0, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0, 0], [0, 0, 0, 1, 1, 0], [0, 0, 1, 0, 0, 0],
]
CODENDRIFORM_LEFT_TERMS = [
    ([[1, 0, 0], [0, 1, 1], [0, 0, 1]], [[0, 0, 1], [1, 0, 0], [1, 1, 0]]),
    ([[1, 0, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 1, 1], [0, 0, 1, 0, 0]], [[1]]),
]
CODENDRIFORM_RIGHT_TERMS = [
    ([[1]], [[1, 1, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 1, 0, 0], [0, 0, 1, 1, 0], [0, 1, 0, 0, 0]]),
]


ASM_DELTA = [
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [1, -1, 0, 0, 1],
    [0, 1, -1, 1, 0],
    [0, 0, 1, 0, 0],
]
ASM_DELTA_SUPPORT = [
    [0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [1, 1, 0, 0, 1],
    [0, 1, 1, 1, 0],
    [0, 0, 1, 0, 0],
]
ASM_PRODUCT_LEFT = [[0, 1, 0], [1, -1, 1], [0, 1, 0]]
ASM_PRODUCT_RIGHT = [[1]]
ASM_PRODUCT_TERMS = [
    [[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]],
    [[0, 1, 0, 0], [1, -1, 0, 1], [0, 1, 0, 0], [0, 0, 1, 0]],
    [[0, 0, 1, 0], [1, 0, -1, 1], [0, 0, 1, 0], [0, 1, 0, 0]],
    [[0, 0, 1, 0], [0, 1, -1, 1], [0, 0, 1, 0], [1, 0, 0, 0]],
]
ASM_COPRODUCT_INPUT = [[0, 1, 0, 0], [1, -1, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]
ASM_COPRODUCT_TERMS = [
    ([], ASM_COPRODUCT_INPUT),
    ([[0, 1, 0], [1, -1, 1], [0, 1, 0]], [[1]]),
    (ASM_COPRODUCT_INPUT, []),
]

UBP_TEXT = "{1,4,5}->{2,5,6}; {2}->{1}; {3,6}->{3,4}"
UBP_MATRIX = [
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 0, 1],
    [1, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 1, 0],
]

# Six-vertex statistic classes of the seven size-3 ASMs, as displayed.
NW_CLASSES_3 = [
    [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]],
    [[[0, 0, 1], [0, 1, 0], [1, 0, 0]]],
    [[[1, 0, 0], [0, 0, 1], [0, 1, 0]], [[0, 1, 0], [1, 0, 0], [0, 0, 1]]],
    [[[0, 0, 1], [1, 0, 0], [0, 1, 0]], [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
     [[0, 1, 0], [1, -1, 1], [0, 1, 0]]],
]
IO_CLASSES_3_SIZES = [6, 1]
IO_NW_CLASSES_3_SIZES = [1, 1, 1, 2, 2]

# Hasse diagram of an order interval; edges point from a matrix to its cover.
INTERVAL_NODES = {
    1: [[1, 0, 0, 0], [1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]],
    2: [[0, 1, 0, 0], [0, 1, 1, 0], [1, 0, 1, 0], [0, 0, 0, 1]],
    3: [[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 0]],
    4: [[0, 1, 0, 0], [0, 1, 0, 1], [1, 0, 0, 1], [0, 0, 1, 0]],
    5: [[1, 0, 0, 0], [1, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0]],
    6: [[0, 0, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1], [0, 1, 0, 0]],
    7: [[0, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [1, 0, 0, 0]],
    8: [[0, 0, 1, 0], [0, 0, 1, 1], [0, 1, 0, 1], [1, 0, 0, 0]],
}
INTERVAL_EDGES = [(1, 2), (1, 3), (2, 4), (3, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 8)]
