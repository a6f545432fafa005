"""Worked examples transcribed once and then frozen."""

# (word, SYT) for every weight-0 word with r <= 6, odd r included via the 1,0,-1 padding.
WORD_SYT_UP_TO_6 = [
    ((1, -1), [[1, 2]]),
    ((1, 0, -1), [[1], [2], [3]]),
    ((1, -1, 1, -1), [[1, 2, 3, 4]]),
    ((1, 1, -1, -1), [[1, 2], [3, 4]]),
    ((1, 0, 0, -1), [[1, 3], [2, 4]]),
    ((1, -1, 1, 0, -1), [[1, 2, 3], [4], [5]]),
    ((1, 1, -1, 0, -1), [[1, 2, 4], [3], [5]]),
    ((1, 0, 0, 0, -1), [[1, 3, 4], [2], [5]]),
    ((1, 1, 0, -1, -1), [[1, 2, 5], [3], [4]]),
    ((1, 0, 1, -1, -1), [[1, 3, 5], [2], [4]]),
    ((1, 0, -1, 1, -1), [[1, 4, 5], [2], [3]]),
    ((1, -1, 1, -1, 1, -1), [[1, 2, 3, 4, 5, 6]]),
    ((1, -1, 1, 1, -1, -1), [[1, 2, 3, 4], [5, 6]]),
    ((1, -1, 1, 0, 0, -1), [[1, 2, 3, 5], [4, 6]]),
    ((1, 1, -1, 0, 0, -1), [[1, 2, 4, 5], [3, 6]]),
    ((1, 0, 0, 0, 0, -1), [[1, 3, 4, 5], [2, 6]]),
    ((1, 1, 1, -1, -1, -1), [[1, 2, 3, 6], [4, 5]]),
    ((1, 0, 0, 1, -1, -1), [[1, 3, 4, 6], [2, 5]]),
    ((1, 1, -1, -1, 1, -1), [[1, 2, 5, 6], [3, 4]]),
    ((1, 0, 0, -1, 1, -1), [[1, 3, 5, 6], [2, 4]]),
    ((1, 0, 1, 0, -1, -1), [[1, 3], [2, 4], [5, 6]]),
    ((1, 1, 0, -1, 0, -1), [[1, 2], [3, 5], [4, 6]]),
    ((1, 0, 1, -1, 0, -1), [[1, 3], [2, 5], [4, 6]]),
    ((1, 0, -1, 1, 0, -1), [[1, 4], [2, 5], [3, 6]]),
    ((1, 1, -1, 1, -1, -1), [[1, 2, 4, 6], [3, 5]]),
    ((1, 1, 0, 0, -1, -1), [[1, 2], [3, 4], [5, 6]]),
]

# The two objects of size 6 sharing the descent set {2, 4}.
SHARED_DESCENT_PAIR = [
    ((1, 1, -1, 1, -1, -1), [[1, 2, 4, 6], [3, 5]]),
    ((1, 1, 0, 0, -1, -1), [[1, 2], [3, 4], [5, 6]]),
]

# All (lambda, mu, L, Q, Q~, V) with r <= 3; L as (left, middle, right, mu1).
SMALL_TABLE = [
    ((1,), (1,), ((1,), (), (), 1), [[1]], [[1, 2]], (1,)),
    ((1, 1), (1,), ((1,), (), (1,), 1), [[1], [2]], [[1], [2], [3]], (1, 0)),
    ((2,), (), ((), (), (1, 2), 0), [[1, 2]], [[1, 2]], (1, -1)),
    ((2,), (2,), ((1, 2), (), (), 2), [[1, 2]], [[1, 2], [3, 4]], (1, 1)),
    ((1, 1, 1), (), ((1,), (1,), (1,), 0), [[1], [2], [3]], [[1], [2], [3]], (1, 0, -1)),
    ((2, 1), (1,), ((1,), (), (1, 2), 1), [[1, 2], [3]], [[1, 2], [3, 4]], (1, 1, -1)),
    ((2, 1), (1,), ((1,), (), (1, 2), 1), [[1, 3], [2]], [[1, 3], [2, 4]], (1, 0, 0)),
    ((2, 1), (2,), ((1, 2), (), (1,), 2), [[1, 2], [3]], [[1, 2, 5], [3], [4]], (1, 1, 0)),
    ((2, 1), (2,), ((1, 2), (), (1,), 2), [[1, 3], [2]], [[1, 3, 5], [2], [4]], (1, 0, 1)),
    ((3,), (1,), ((3,), (), (1, 2), 1), [[1, 2, 3]], [[1, 2, 3, 4]], (1, -1, 1)),
    ((3,), (3,), ((1, 2, 3), (), (), 3), [[1, 2, 3]], [[1, 2, 3, 6], [4, 5]], (1, 1, 1)),
]

# Running example: lambda = (4,3,2), mu = (2), Case 2.
RUNNING_Q = [[1, 2, 6, 9], [3, 5, 8], [4, 7]]
RUNNING_LR = ((1, 2, 3, 4), (1, 2), (1, 2, 3), 2)
RUNNING_Q_TILDE = [[1, 2, 6, 9, 11], [3, 5, 8], [4, 7, 10]]
RUNNING_PADDED = [[1, 2, 6, 9, 11, 12], [3, 5, 8, 13], [4, 7, 10, 14]]
RUNNING_LONG_WORD = (1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1)
RUNNING_WORD = (1, 1, 0, -1, 0, 1, -1, 0, 1)
RUNNING_EVACUATED = [[1, 4, 5, 7, 8, 11], [2, 6, 10, 12], [3, 9, 13, 14]]

# Case 3 example: lambda = (5,1,1), mu = (2).
CASE3_Q_TILDE = [[1, 4, 5, 6, 7], [2, 8, 9], [3]]

# A 16-step path and its descent set.
LONG_PATH = (1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1, 1, -1)
LONG_PATH_DESCENTS = (2, 3, 6, 9, 12, 13)

# Arc-diagram examples.
ARC_EXAMPLES = [
    ((1, 1, 0, -1, 0, 1, -1, 0, 1), [[1, 2, 6, 9], [3, 5, 8], [4, 7]]),
    ((1, 1, -1, 0, 1, 0, 1, 0, -1, 0, -1, -1), [[1, 2, 4, 5, 7, 10], [3, 6, 8, 12], [9, 11]]),
    ((1, 1, -1, 0, 1, 1, 0, 1, -1), [[1, 2, 4, 5, 6, 8], [3, 7], [9]]),
    ((1, 1, -1, 1, 1, 1, -1, 1, -1), [[1, 2, 4, 5, 6, 8], [3, 7, 9]]),
]

# LR tableaux for lambda = (8,5,3) by mu1: (case, left, middle, right).
LR_853 = {
    0: [],
    1: [(3, (1, 2, 3), (1, 2, 3, 4, 5, 8), (1, 2, 3, 4, 5, 6, 7))],
    2: [(1, (1, 2, 3, 5), (1, 2, 3, 4), (1, 2, 3, 4, 5, 6, 7, 8))],
    3: [
        (2, (1, 2, 3, 5, 8), (1, 2, 3, 4), (1, 2, 3, 4, 5, 6, 7)),
        (3, (1, 2, 3, 7, 8), (1, 2, 3, 4, 5, 6), (1, 2, 3, 4, 5)),
    ],
    4: [(1, (1, 2, 3, 5, 7, 8), (1, 2, 3, 4), (1, 2, 3, 4, 5, 6))],
    5: [(2, (1, 2, 3, 5, 6, 7, 8), (1, 2, 3, 4), (1, 2, 3, 4, 5))],
    6: [],
}

RIORDAN = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213]
