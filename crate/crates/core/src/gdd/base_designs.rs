//! Small 3-GDDs of type `4^u 2^v` that the recursion uses as base cases.
//! They were found once by the triangle engine on the complete multipartite
//! graph (groups of 4 first, then groups of 2, consecutive) and are checked
//! again every time they are loaded.

use super::{verify_gdd, Gdd, GddType};

const T_4_3_2_6: &[[u8; 3]] = &[
    [0, 4, 21], [0, 5, 19], [0, 6, 13], [0, 7, 9], [0, 8, 22], [0, 10, 17],
    [0, 11, 15], [0, 12, 20], [0, 14, 16], [0, 18, 23], [1, 4, 19], [1, 5, 11],
    [1, 6, 20], [1, 7, 16], [1, 8, 15], [1, 9, 18], [1, 10, 12], [1, 13, 14],
    [1, 17, 23], [1, 21, 22], [2, 4, 14], [2, 5, 22], [2, 6, 19], [2, 7, 20],
    [2, 8, 18], [2, 9, 16], [2, 10, 15], [2, 11, 23], [2, 12, 17], [2, 13, 21],
    [3, 4, 11], [3, 5, 20], [3, 6, 12], [3, 7, 17], [3, 8, 19], [3, 9, 15],
    [3, 10, 14], [3, 13, 18], [3, 16, 22], [3, 21, 23], [4, 8, 20], [4, 9, 12],
    [4, 10, 23], [4, 13, 22], [4, 15, 16], [4, 17, 18], [5, 8, 17], [5, 9, 23],
    [5, 10, 21], [5, 12, 15], [5, 13, 16], [5, 14, 18], [6, 8, 16], [6, 9, 22],
    [6, 10, 18], [6, 11, 17], [6, 14, 21], [6, 15, 23], [7, 8, 14], [7, 10, 13],
    [7, 11, 12], [7, 15, 22], [7, 18, 21], [7, 19, 23], [8, 12, 21], [8, 13, 23],
    [9, 13, 19], [9, 14, 20], [9, 17, 21], [10, 16, 19], [10, 20, 22], [11, 13, 20],
    [11, 14, 19], [11, 16, 21], [11, 18, 22], [12, 14, 23], [12, 16, 18], [12, 19, 22],
    [13, 15, 17], [14, 17, 22], [15, 18, 20], [15, 19, 21], [16, 20, 23], [17, 19, 20],
];

const T_4_4_2_3: &[[u8; 3]] = &[
    [0, 4, 12], [0, 5, 20], [0, 6, 8], [0, 7, 14], [0, 9, 19], [0, 10, 21],
    [0, 11, 18], [0, 13, 16], [0, 15, 17], [1, 4, 10], [1, 5, 19], [1, 6, 20],
    [1, 7, 16], [1, 8, 15], [1, 9, 13], [1, 11, 12], [1, 14, 17], [1, 18, 21],
    [2, 4, 20], [2, 5, 18], [2, 6, 16], [2, 7, 12], [2, 8, 21], [2, 9, 14],
    [2, 10, 19], [2, 11, 15], [2, 13, 17], [3, 4, 15], [3, 5, 17], [3, 6, 11],
    [3, 7, 8], [3, 9, 16], [3, 10, 14], [3, 12, 21], [3, 13, 18], [3, 19, 20],
    [4, 8, 13], [4, 9, 18], [4, 11, 17], [4, 14, 16], [4, 19, 21], [5, 8, 14],
    [5, 9, 15], [5, 10, 12], [5, 11, 16], [5, 13, 21], [6, 9, 12], [6, 10, 13],
    [6, 14, 21], [6, 15, 19], [6, 17, 18], [7, 9, 20], [7, 10, 17], [7, 11, 21],
    [7, 13, 19], [7, 15, 18], [8, 12, 18], [8, 16, 19], [8, 17, 20], [9, 17, 21],
    [10, 15, 20], [10, 16, 18], [11, 13, 20], [11, 14, 19], [12, 16, 20], [12, 17, 19],
    [14, 18, 20], [15, 16, 21],
];

const T_4_4_2_6: &[[u8; 3]] = &[
    [0, 4, 8], [0, 5, 12], [0, 6, 27], [0, 7, 23], [0, 9, 17], [0, 10, 26],
    [0, 11, 22], [0, 13, 18], [0, 14, 20], [0, 15, 16], [0, 19, 24], [0, 21, 25],
    [1, 4, 20], [1, 5, 15], [1, 6, 16], [1, 7, 13], [1, 8, 21], [1, 9, 12],
    [1, 10, 22], [1, 11, 27], [1, 14, 19], [1, 17, 25], [1, 18, 23], [1, 24, 26],
    [2, 4, 12], [2, 5, 8], [2, 6, 10], [2, 7, 21], [2, 9, 18], [2, 11, 15],
    [2, 13, 22], [2, 14, 23], [2, 16, 25], [2, 17, 20], [2, 19, 26], [2, 24, 27],
    [3, 4, 11], [3, 5, 13], [3, 6, 12], [3, 7, 9], [3, 8, 23], [3, 10, 18],
    [3, 14, 21], [3, 15, 19], [3, 16, 20], [3, 17, 26], [3, 22, 24], [3, 25, 27],
    [4, 9, 26], [4, 10, 27], [4, 13, 19], [4, 14, 16], [4, 15, 24], [4, 17, 22],
    [4, 18, 21], [4, 23, 25], [5, 9, 25], [5, 10, 19], [5, 11, 23], [5, 14, 27],
    [5, 16, 26], [5, 17, 18], [5, 20, 24], [5, 21, 22], [6, 8, 25], [6, 9, 20],
    [6, 11, 21], [6, 13, 24], [6, 14, 17], [6, 15, 18], [6, 19, 23], [6, 22, 26],
    [7, 8, 26], [7, 10, 24], [7, 11, 20], [7, 12, 16], [7, 14, 22], [7, 15, 17],
    [7, 18, 27], [7, 19, 25], [8, 12, 24], [8, 13, 17], [8, 14, 18], [8, 15, 27],
    [8, 16, 22], [8, 19, 20], [9, 13, 27], [9, 14, 24], [9, 15, 21], [9, 16, 23],
    [9, 19, 22], [10, 12, 17], [10, 13, 23], [10, 14, 25], [10, 15, 20], [10, 16, 21],
    [11, 12, 19], [11, 13, 16], [11, 14, 26], [11, 17, 24], [11, 18, 25], [12, 18, 22],
    [12, 20, 23], [12, 21, 27], [12, 25, 26], [13, 20, 25], [13, 21, 26], [15, 22, 25],
    [15, 23, 26], [16, 18, 24], [16, 19, 27], [17, 19, 21], [17, 23, 27], [18, 20, 26],
    [20, 22, 27], [21, 23, 24],
];

const T_4_4_2_9: &[[u8; 3]] = &[
    [0, 4, 24], [0, 5, 13], [0, 6, 18], [0, 7, 32], [0, 8, 14], [0, 9, 21],
    [0, 10, 19], [0, 11, 31], [0, 12, 26], [0, 15, 28], [0, 16, 33], [0, 17, 29],
    [0, 20, 25], [0, 22, 30], [0, 23, 27], [1, 4, 27], [1, 5, 24], [1, 6, 23],
    [1, 7, 10], [1, 8, 30], [1, 9, 29], [1, 11, 16], [1, 12, 25], [1, 13, 26],
    [1, 14, 31], [1, 15, 17], [1, 18, 22], [1, 19, 32], [1, 20, 33], [1, 21, 28],
    [2, 4, 10], [2, 5, 19], [2, 6, 12], [2, 7, 25], [2, 8, 23], [2, 9, 24],
    [2, 11, 15], [2, 13, 22], [2, 14, 16], [2, 17, 21], [2, 18, 31], [2, 20, 26],
    [2, 27, 28], [2, 29, 33], [2, 30, 32], [3, 4, 17], [3, 5, 32], [3, 6, 11],
    [3, 7, 8], [3, 9, 16], [3, 10, 28], [3, 12, 21], [3, 13, 23], [3, 14, 26],
    [3, 15, 30], [3, 18, 24], [3, 19, 22], [3, 20, 31], [3, 25, 29], [3, 27, 33],
    [4, 8, 22], [4, 9, 30], [4, 11, 14], [4, 12, 20], [4, 13, 28], [4, 15, 31],
    [4, 16, 23], [4, 18, 33], [4, 19, 29], [4, 21, 25], [4, 26, 32], [5, 8, 26],
    [5, 9, 25], [5, 10, 12], [5, 11, 29], [5, 14, 27], [5, 15, 33], [5, 16, 20],
    [5, 17, 18], [5, 21, 23], [5, 22, 31], [5, 28, 30], [6, 8, 20], [6, 9, 27],
    [6, 10, 26], [6, 13, 33], [6, 14, 22], [6, 15, 25], [6, 16, 28], [6, 17, 24],
    [6, 19, 30], [6, 21, 31], [6, 29, 32], [7, 9, 20], [7, 11, 22], [7, 12, 19],
    [7, 13, 24], [7, 14, 33], [7, 15, 23], [7, 16, 27], [7, 17, 26], [7, 18, 21],
    [7, 28, 31], [7, 29, 30], [8, 12, 18], [8, 13, 29], [8, 15, 21], [8, 16, 32],
    [8, 17, 33], [8, 19, 28], [8, 24, 27], [8, 25, 31], [9, 12, 32], [9, 13, 18],
    [9, 14, 23], [9, 15, 26], [9, 17, 19], [9, 22, 28], [9, 31, 33], [10, 13, 20],
    [10, 14, 32], [10, 15, 24], [10, 16, 21], [10, 17, 31], [10, 18, 23], [10, 22, 29],
    [10, 25, 27], [10, 30, 33], [11, 12, 24], [11, 13, 21], [11, 17, 25], [11, 18, 30],
    [11, 19, 20], [11, 23, 28], [11, 26, 33], [11, 27, 32], [12, 16, 29], [12, 17, 28],
    [12, 22, 33], [12, 23, 30], [12, 27, 31], [13, 16, 19], [13, 17, 27], [13, 25, 30],
    [13, 31, 32], [14, 17, 30], [14, 18, 25], [14, 19, 24], [14, 20, 28], [14, 21, 29],
    [15, 16, 18], [15, 19, 27], [15, 20, 29], [15, 22, 32], [16, 22, 25], [16, 24, 30],
    [16, 26, 31], [17, 20, 22], [17, 23, 32], [18, 20, 32], [18, 26, 28], [18, 27, 29],
    [19, 21, 33], [19, 23, 31], [19, 25, 26], [20, 23, 24], [20, 27, 30], [21, 22, 27],
    [21, 24, 32], [21, 26, 30], [22, 24, 26], [23, 25, 33], [23, 26, 29], [24, 28, 33],
    [24, 29, 31], [25, 28, 32],
];

const T_4_7_2_3: &[[u8; 3]] = &[
    [0, 4, 29], [0, 5, 21], [0, 6, 8], [0, 7, 22], [0, 9, 23], [0, 10, 12],
    [0, 11, 25], [0, 13, 33], [0, 14, 17], [0, 15, 26], [0, 16, 20], [0, 18, 32],
    [0, 19, 27], [0, 24, 31], [0, 28, 30], [1, 4, 13], [1, 5, 23], [1, 6, 24],
    [1, 7, 18], [1, 8, 32], [1, 9, 27], [1, 10, 31], [1, 11, 26], [1, 12, 25],
    [1, 14, 20], [1, 15, 33], [1, 16, 29], [1, 17, 28], [1, 19, 22], [1, 21, 30],
    [2, 4, 19], [2, 5, 17], [2, 6, 25], [2, 7, 15], [2, 8, 26], [2, 9, 12],
    [2, 10, 23], [2, 11, 22], [2, 13, 18], [2, 14, 32], [2, 16, 28], [2, 20, 33],
    [2, 21, 24], [2, 27, 31], [2, 29, 30], [3, 4, 14], [3, 5, 20], [3, 6, 16],
    [3, 7, 28], [3, 8, 19], [3, 9, 25], [3, 10, 15], [3, 11, 32], [3, 12, 27],
    [3, 13, 23], [3, 17, 31], [3, 18, 24], [3, 21, 33], [3, 22, 30], [3, 26, 29],
    [4, 8, 20], [4, 9, 30], [4, 10, 27], [4, 11, 12], [4, 15, 22], [4, 16, 33],
    [4, 17, 24], [4, 18, 28], [4, 21, 25], [4, 23, 32], [4, 26, 31], [5, 8, 22],
    [5, 9, 16], [5, 10, 32], [5, 11, 33], [5, 12, 31], [5, 13, 24], [5, 14, 29],
    [5, 15, 27], [5, 18, 25], [5, 19, 28], [5, 26, 30], [6, 9, 32], [6, 10, 29],
    [6, 11, 31], [6, 12, 23], [6, 13, 22], [6, 14, 21], [6, 15, 28], [6, 17, 30],
    [6, 18, 27], [6, 19, 33], [6, 20, 26], [7, 8, 29], [7, 9, 20], [7, 10, 17],
    [7, 11, 21], [7, 12, 16], [7, 13, 31], [7, 14, 33], [7, 19, 25], [7, 23, 24],
    [7, 26, 32], [7, 27, 30], [8, 12, 17], [8, 13, 27], [8, 14, 25], [8, 15, 24],
    [8, 16, 31], [8, 18, 33], [8, 21, 28], [8, 23, 30], [9, 13, 21], [9, 14, 24],
    [9, 15, 17], [9, 18, 22], [9, 19, 29], [9, 26, 28], [9, 31, 33], [10, 13, 25],
    [10, 14, 19], [10, 16, 24], [10, 18, 21], [10, 20, 30], [10, 22, 26], [10, 28, 33],
    [11, 13, 29], [11, 14, 30], [11, 15, 19], [11, 16, 23], [11, 17, 27], [11, 18, 20],
    [11, 24, 28], [12, 18, 29], [12, 19, 21], [12, 20, 32], [12, 22, 28], [12, 24, 30],
    [12, 26, 33], [13, 16, 30], [13, 17, 20], [13, 19, 26], [13, 28, 32], [14, 16, 26],
    [14, 18, 31], [14, 22, 27], [14, 23, 28], [15, 16, 21], [15, 18, 30], [15, 20, 31],
    [15, 23, 25], [15, 29, 32], [16, 22, 25], [16, 27, 32], [17, 21, 26], [17, 22, 33],
    [17, 23, 29], [17, 25, 32], [18, 23, 26], [19, 20, 24], [19, 23, 31], [19, 30, 32],
    [20, 25, 29], [20, 27, 28], [21, 27, 29], [21, 31, 32], [22, 24, 32], [22, 29, 31],
    [23, 27, 33], [24, 29, 33], [25, 28, 31], [25, 30, 33],
];

pub(super) fn base_design(u: usize, v: usize) -> Option<Gdd> {
    let table = match (u, v) {
        (3, 6) => T_4_3_2_6,
        (4, 3) => T_4_4_2_3,
        (4, 6) => T_4_4_2_6,
        (4, 9) => T_4_4_2_9,
        (7, 3) => T_4_7_2_3,
        _ => return None,
    };
    let mut sizes = vec![4; u];
    sizes.extend(std::iter::repeat(2).take(v));
    let d = Gdd {
        triples: table.iter().map(|t| t.map(usize::from)).collect(),
        ..Gdd::with_layout(&sizes)
    };
    let report = verify_gdd(&d, &GddType::new([(4, u), (2, v)]));
    assert!(report.passed(), "stored base design 4^{u} 2^{v} is corrupt");
    Some(d)
}
