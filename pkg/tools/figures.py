"""Coordinate transcriptions of the catalog patches.

Each entry lists vertex positions, edges, the role walk parameters and the
markers.  Rotations are taken clockwise in drawing coordinates so that the
boundary walk reads the roles in the order given here.
"""

H = {
    "r": 3,
    "coords": {"a": (0, 1), "b": (0.87, 0.5), "c": (0.87, -0.5), "d": (0, -1),
               "e": (-0.87, -0.5), "f": (-0.87, 0.5)},
    "edges": [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a")],
    "roles": {"m": 1, "n": 3, "s": 2, "i0": "f"},
    "markers": [],
}

Q2 = {
    "r": 4,
    "coords": {"p": (0, 0), "q": (0, 1), "t": (1, 1), "u": (2, 1), "x": (2, 0), "y": (1, 0)},
    "edges": [("p", "q"), ("q", "t"), ("t", "u"), ("u", "x"), ("x", "y"), ("y", "p"),
              ("t", "y")],
    "roles": {"m": 1, "n": 3, "s": 2, "i0": "u"},
    "markers": [("diamond", ("t", "y"), None, None)],
}

PN35 = {
    "r": 4,
    "coords": {"B": (-0.5, 1), "C": (-1.5, 3), "D": (-4, 6), "E": (-3.5, 7), "F": (-2.5, 7),
               "G": (-1, 6.5), "H": (-0.5, 7), "I": (0.5, 7), "J": (1, 7.5), "K": (2.5, 7),
               "L": (1.5, 3), "A": (0.5, 1), "M": (-0.5, 4.5), "N": (0.5, 3), "O": (-1, 6)},
    "edges": [("B", "C"), ("C", "D"), ("D", "E"), ("E", "F"), ("F", "G"), ("G", "H"),
              ("H", "I"), ("I", "J"), ("J", "K"), ("K", "L"), ("L", "A"), ("A", "B"),
              ("C", "M"), ("M", "N"), ("N", "A"), ("D", "O"), ("O", "G"), ("C", "O"),
              ("M", "O"), ("M", "I"), ("N", "I"), ("N", "J")],
    "roles": {"m": 2, "n": 7, "s": 1, "i0": "B"},
    "markers": [("square", ("C", "O"), "BCMNA", "DEFGO"),
                ("square", ("N", "I"), "ANJKL", "OGHIM")],
}

PN37 = {
    "r": 4,
    "coords": {"P0": (0, 1.5), "P1": (-1, 2), "P2": (-0.5, 3), "P3": (0.5, 3.5), "P4": (1.5, 3),
               "P5": (2.5, 3), "P6": (4.5, 2.5), "P7": (5.5, 3), "P8": (6.5, 2.5),
               "P9": (5.5, 2), "P10": (5, 1), "P11": (4, 0.5), "P12": (3, 0.5),
               "P13": (2, 0), "P14": (2, 1), "P15": (1, 1.5), "P16": (2, 2)},
    "edges": [(f"P{i}", f"P{(i + 1) % 16}") for i in range(16)]
    + [("P12", "P14"), ("P14", "P16"), ("P16", "P15"), ("P4", "P16"), ("P16", "P5"),
       ("P10", "P6"), ("P6", "P9"), ("P9", "P7")],
    "roles": {"m": 2, "n": 11, "s": 1, "i0": "P0"},
    "markers": [("vertex", ("P16",), 7, 7)],
}

PF35 = {
    "r": 4,
    "coords": {
        'x0': (-0.145531, 0.23161), 'x1': (-0.063274, -0.419927), 'x2': (0.405804, -0.125166),
        'x3': (-0.993712, 0.111964), 'x4': (-0.993712, -0.111964), 'x5': (-0.330279, -0.943883),
        'x6': (-0.111964, -0.993712), 'x7': (0.111964, -0.993712), 'x8': (0.943883, -0.330279),
        'x9': (0.993712, -0.111964), 'x10': (0.993712, 0.111964), 'x11': (0.330279, 0.943883),
        'x12': (0.111964, 0.993712), 'x13': (-0.943883, 0.330279), 'x14': (-0.111964, 0.993712),
        'x15': (-0.532032, 0.846724), 'x16': (-0.707107, 0.707107), 'x17': (-0.846724, 0.532032),
        'x18': (-0.330279, 0.943883), 'x19': (-0.846724, -0.532032), 'x20': (-0.707107, -0.707107),
        'x21': (-0.532032, -0.846724), 'x22': (-0.943883, -0.330279), 'x23': (0.532032, -0.846724),
        'x24': (0.707107, -0.707107), 'x25': (0.846724, -0.532032), 'x26': (0.330279, -0.943883),
        'x27': (0.846724, 0.532032), 'x28': (0.707107, 0.707107), 'x29': (0.532032, 0.846724),
        'x30': (0.943883, 0.330279)},
    "edges": [('x0', 'x1'), ('x1', 'x2'), ('x2', 'x0'), ('x0', 'x3'), ('x3', 'x4'), ('x4', 'x5'),
              ('x5', 'x1'), ('x5', 'x6'), ('x6', 'x1'), ('x6', 'x7'), ('x7', 'x8'), ('x8', 'x2'),
              ('x8', 'x9'), ('x9', 'x2'), ('x9', 'x10'), ('x10', 'x11'), ('x11', 'x0'),
              ('x11', 'x12'), ('x12', 'x13'), ('x13', 'x3'), ('x12', 'x14'), ('x14', 'x13'),
              ('x14', 'x15'), ('x15', 'x16'), ('x16', 'x17'), ('x17', 'x13'), ('x14', 'x18'),
              ('x18', 'x15'), ('x4', 'x19'), ('x19', 'x20'), ('x20', 'x21'), ('x21', 'x5'),
              ('x4', 'x22'), ('x22', 'x19'), ('x7', 'x23'), ('x23', 'x24'), ('x24', 'x25'),
              ('x25', 'x8'), ('x7', 'x26'), ('x26', 'x23'), ('x10', 'x27'), ('x27', 'x28'),
              ('x28', 'x29'), ('x29', 'x11'), ('x10', 'x30'), ('x30', 'x27')],
    "roles": None,
    "markers": [("diamond", ("x4", "x5"), 5, 5), ("diamond", ("x7", "x8"), 5, 5),
                ("diamond", ("x10", "x11"), 5, 5), ("vertex", ("x13",), 5, 5)],
}
