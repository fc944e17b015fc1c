//! Generated by `print_basis_data`; do not edit by hand.

/// `((rows, cols), [(anchor row, anchor col, missing corner code)])`
#[rustfmt::skip]
pub(super) const BASIS: &[((u8, u8), &[(u8, u8, u8)])] = &[
    ((4, 6), &[(1, 1, 3), (1, 3, 2), (1, 5, 2), (2, 2, 3), (2, 4, 0), (3, 1, 1), (3, 3, 1), (3, 5, 0)]),
    ((4, 9), &[(1, 1, 3), (1, 3, 1), (1, 4, 2), (1, 6, 3), (1, 8, 2), (2, 2, 1), (2, 7, 2), (3, 1, 1), (3, 3, 0), (3, 5, 1), (3, 6, 2), (3, 8, 0)]),
    ((5, 6), &[(1, 1, 2), (1, 3, 3), (1, 5, 2), (2, 1, 1), (2, 4, 3), (3, 2, 0), (3, 5, 2), (4, 1, 1), (4, 3, 0), (4, 5, 1)]),
    ((5, 9), &[(1, 1, 1), (1, 2, 2), (1, 4, 2), (1, 6, 2), (1, 8, 2), (2, 3, 0), (2, 5, 0), (2, 8, 1), (3, 1, 2), (3, 7, 1), (4, 1, 1), (4, 3, 1), (4, 4, 2), (4, 6, 1), (4, 8, 0)]),
    ((6, 6), &[(1, 1, 3), (1, 3, 2), (1, 5, 2), (2, 2, 2), (2, 4, 0), (3, 1, 3), (3, 5, 0), (4, 2, 3), (4, 4, 1), (5, 1, 1), (5, 3, 1), (5, 5, 0)]),
    ((6, 9), &[(1, 1, 1), (1, 2, 2), (1, 4, 2), (1, 6, 2), (1, 8, 2), (2, 3, 0), (2, 5, 0), (2, 7, 0), (3, 1, 3), (3, 8, 0), (4, 2, 3), (4, 4, 3), (4, 6, 3), (5, 1, 1), (5, 3, 1), (5, 5, 1), (5, 7, 1), (5, 8, 2)]),
    ((7, 6), &[(1, 1, 2), (1, 3, 3), (1, 5, 2), (2, 1, 1), (2, 4, 2), (3, 3, 2), (3, 5, 0), (4, 1, 3), (4, 3, 1), (5, 2, 1), (5, 5, 2), (6, 1, 1), (6, 3, 0), (6, 5, 1)]),
    ((7, 9), &[(1, 1, 1), (1, 2, 2), (1, 4, 2), (1, 6, 2), (1, 8, 2), (2, 3, 0), (2, 5, 0), (2, 7, 0), (3, 1, 2), (3, 8, 0), (4, 1, 1), (4, 3, 1), (4, 4, 2), (4, 6, 2), (5, 5, 0), (5, 8, 2), (6, 1, 1), (6, 2, 2), (6, 4, 1), (6, 6, 0), (6, 8, 1)]),
    ((8, 6), &[(1, 1, 2), (1, 3, 3), (1, 5, 2), (2, 1, 1), (2, 4, 2), (3, 3, 2), (3, 5, 0), (4, 1, 1), (4, 2, 2), (5, 3, 0), (5, 5, 2), (6, 1, 2), (6, 4, 0), (7, 1, 1), (7, 3, 1), (7, 5, 0)]),
    ((8, 9), &[(1, 1, 1), (1, 2, 2), (1, 4, 2), (1, 6, 2), (1, 8, 2), (2, 3, 0), (2, 5, 0), (2, 7, 0), (3, 1, 2), (3, 8, 0), (4, 1, 1), (4, 3, 1), (4, 4, 2), (4, 6, 2), (5, 5, 0), (5, 8, 2), (6, 1, 2), (6, 3, 2), (6, 7, 2), (7, 1, 1), (7, 3, 1), (7, 5, 1), (7, 6, 2), (7, 8, 0)]),
    ((9, 6), &[(1, 1, 2), (1, 3, 3), (1, 5, 2), (2, 1, 1), (2, 4, 2), (3, 3, 2), (3, 5, 0), (4, 1, 1), (4, 2, 2), (5, 3, 0), (5, 5, 2), (6, 1, 3), (6, 5, 1), (7, 2, 3), (7, 4, 1), (8, 1, 1), (8, 3, 1), (8, 5, 0)]),
    ((9, 9), &[(1, 1, 1), (1, 2, 2), (1, 4, 2), (1, 6, 2), (1, 8, 2), (2, 3, 0), (2, 5, 0), (2, 7, 0), (3, 1, 2), (3, 8, 0), (4, 1, 1), (4, 3, 1), (4, 4, 2), (4, 6, 2), (5, 5, 0), (5, 8, 2), (6, 1, 1), (6, 2, 2), (6, 4, 1), (6, 7, 3), (7, 5, 0), (7, 8, 2), (8, 1, 1), (8, 2, 2), (8, 4, 1), (8, 6, 0), (8, 8, 1)]),
];
