//! Built-in example algebras. These mirror the fixture files shipped with
//! the command-line tool and give the test suites a shared vocabulary.

use crate::quiver::{AlgebraPresentation, Arrow, Quiver, Relation};

fn arrow(name: &str, source: usize, target: usize) -> Arrow {
    Arrow {
        name: name.into(),
        source,
        target,
    }
}

/// 1 <-a- 2 <-b- 3 with ab = 0.
pub fn chain_ab() -> AlgebraPresentation {
    let q = Quiver::new(3, vec![arrow("a", 2, 1), arrow("b", 3, 2)]);
    AlgebraPresentation::new(q, vec![Relation::monomial(vec![0, 1])])
}

/// Hereditary 1 <-a- 2.
pub fn linear2() -> AlgebraPresentation {
    let q = Quiver::new(2, vec![arrow("a", 2, 1)]);
    AlgebraPresentation::new(q, vec![])
}

/// Hereditary 1 <-a- 2 <-b- 3.
pub fn linear3() -> AlgebraPresentation {
    let q = Quiver::new(3, vec![arrow("a", 2, 1), arrow("b", 3, 2)]);
    AlgebraPresentation::new(q, vec![])
}

/// Loop a at vertex 1 with a^2 = 0, plus an arm 2 -b-> 1.
pub fn loop_arm() -> AlgebraPresentation {
    let q = Quiver::new(2, vec![arrow("a", 1, 1), arrow("b", 2, 1)]);
    AlgebraPresentation::new(q, vec![Relation::monomial(vec![0, 0])])
}

/// 1 -a-> 2, 2 -b-> 1 with ab = ba = 0 (the radical-square-zero two-cycle).
pub fn two_cycle() -> AlgebraPresentation {
    let q = Quiver::new(2, vec![arrow("a", 1, 2), arrow("b", 2, 1)]);
    AlgebraPresentation::new(
        q,
        vec![
            Relation::monomial(vec![0, 1]),
            Relation::monomial(vec![1, 0]),
        ],
    )
}

/// 1 -a-> 2, 2 -b-> 1 with the single relation aba = 0.
pub fn aba() -> AlgebraPresentation {
    let q = Quiver::new(2, vec![arrow("a", 1, 2), arrow("b", 2, 1)]);
    AlgebraPresentation::new(q, vec![Relation::monomial(vec![0, 1, 0])])
}

/// Gentle algebra with doubled arrows: 1 <=(a,c)= 2 <=(b,d)= 3, ab = cd = 0.
pub fn double_arrow_gentle() -> AlgebraPresentation {
    let q = Quiver::new(
        3,
        vec![
            arrow("a", 2, 1),
            arrow("b", 3, 2),
            arrow("c", 2, 1),
            arrow("d", 3, 2),
        ],
    );
    AlgebraPresentation::new(
        q,
        vec![
            Relation::monomial(vec![0, 1]),
            Relation::monomial(vec![2, 3]),
        ],
    )
}

/// Oriented 3-cycle 1 -a-> 2 -b-> 3 -c-> 1 with ba = cb = ac = 0 (gentle).
pub fn three_cycle_gentle() -> AlgebraPresentation {
    let q = Quiver::new(
        3,
        vec![arrow("a", 1, 2), arrow("b", 2, 3), arrow("c", 3, 1)],
    );
    AlgebraPresentation::new(
        q,
        vec![
            Relation::monomial(vec![1, 0]),
            Relation::monomial(vec![2, 1]),
            Relation::monomial(vec![0, 2]),
        ],
    )
}

/// Local algebra K[a]/(a^m), m >= 2.
pub fn loop_pow(m: usize) -> AlgebraPresentation {
    assert!(m >= 2);
    let q = Quiver::new(1, vec![arrow("a", 1, 1)]);
    AlgebraPresentation::new(q, vec![Relation::monomial(vec![0; m])])
}

/// Cyclic Nakayama algebra: n-cycle 1 -> 2 -> ... -> n -> 1 with all paths
/// of length t zero (the ideal J^t). Arrow a_i runs i -> i+1 (a_n: n -> 1).
pub fn cyclic_nakayama(n: usize, t: usize) -> AlgebraPresentation {
    assert!(n >= 1 && t >= 2);
    if n == 1 {
        return loop_pow(t);
    }
    let arrows: Vec<Arrow> = (1..=n)
        .map(|i| arrow(&format!("a{}", i), i, if i == n { 1 } else { i + 1 }))
        .collect();
    let q = Quiver::new(n, arrows);
    // Path of length t starting at vertex s uses arrows s, s+1, ..., s+t-1
    // (indices mod n); composition order lists the last arrow first.
    let relations = (0..n)
        .map(|s| {
            let word: Vec<usize> = (0..t).rev().map(|k| (s + k) % n).collect();
            Relation::monomial(word)
        })
        .collect();
    AlgebraPresentation::new(q, relations)
}

/// Four vertices: 1 <=> 2 (arrows a: 1->2, b: 2->1, ab = ba = 0) with arms
/// 3 -c-> 1 and 4 -d-> 2.
pub fn four_vertex() -> AlgebraPresentation {
    let q = Quiver::new(
        4,
        vec![
            arrow("a", 1, 2),
            arrow("b", 2, 1),
            arrow("c", 3, 1),
            arrow("d", 4, 2),
        ],
    );
    AlgebraPresentation::new(
        q,
        vec![
            Relation::monomial(vec![0, 1]),
            Relation::monomial(vec![1, 0]),
        ],
    )
}

/// The standing catalog used by randomized test sweeps.
pub fn catalog() -> Vec<(&'static str, AlgebraPresentation)> {
    vec![
        ("chain-ab", chain_ab()),
        ("linear2", linear2()),
        ("linear3", linear3()),
        ("loop-arm", loop_arm()),
        ("two-cycle", two_cycle()),
        ("aba", aba()),
        ("double-arrow-gentle", double_arrow_gentle()),
        ("three-cycle-gentle", three_cycle_gentle()),
        ("loop3", loop_pow(3)),
        ("four-vertex", four_vertex()),
    ]
}
