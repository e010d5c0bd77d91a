use std::fmt;

use serde::Serialize;

/// Class `d·L + Σ m_i E_i` in the Picard lattice of the plane blown up at
/// five points, with `L² = 1`, `E_i² = −1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DivisorClass {
    pub d: i64,
    pub m: [i64; 5],
}

impl DivisorClass {
    pub const fn new(d: i64, m: [i64; 5]) -> Self {
        DivisorClass { d, m }
    }

    pub fn dot(&self, other: &DivisorClass) -> i64 {
        self.d * other.d - self.m.iter().zip(&other.m).map(|(a, b)| a * b).sum::<i64>()
    }

    pub fn add(&self, other: &DivisorClass) -> DivisorClass {
        let mut m = self.m;
        for (a, b) in m.iter_mut().zip(&other.m) {
            *a += b;
        }
        DivisorClass { d: self.d + other.d, m }
    }

    /// `−K = 3L − ΣE_i`.
    pub fn anticanonical() -> DivisorClass {
        DivisorClass::new(3, [-1; 5])
    }

    pub fn exceptional(i: usize) -> DivisorClass {
        let mut m = [0; 5];
        m[i - 1] = 1;
        DivisorClass::new(0, m)
    }

    pub fn hyperplane() -> DivisorClass {
        DivisorClass::new(1, [0; 5])
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {:?})", self.d, self.m)
    }
}

/// The sixteen lines: the conic through all five points, the exceptional
/// curves, and the lines through two points (indices from 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Line {
    C,
    E(usize),
    L(usize, usize),
}

impl Line {
    pub fn class(self) -> DivisorClass {
        match self {
            Line::C => DivisorClass::new(2, [-1; 5]),
            Line::E(i) => DivisorClass::exceptional(i),
            Line::L(i, j) => {
                let mut m = [0; 5];
                m[i - 1] = -1;
                m[j - 1] = -1;
                DivisorClass::new(1, m)
            }
        }
    }

    /// `ℓ_{i,j}` with the indices in either order.
    pub fn through(i: usize, j: usize) -> Line {
        Line::L(i.min(j), i.max(j))
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::C => f.write_str("C"),
            Line::E(i) => write!(f, "E_{i}"),
            Line::L(i, j) => write!(f, "l_{{{i},{j}}}"),
        }
    }
}

impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `C`, `E_1..E_5`, then `ℓ_{i,j}` in lexicographic order.
pub fn enumerate_lines() -> Vec<Line> {
    let mut out = vec![Line::C];
    out.extend((1..=5).map(Line::E));
    for i in 1..=5 {
        for j in i + 1..=5 {
            out.push(Line::L(i, j));
        }
    }
    out
}

/// Every class `(d; m)` with `|d| ≤ d_max`, `|m_i| ≤ m_max`, self-intersection
/// −1 and anticanonical degree 1.
pub fn brute_force_lines(d_max: i64, m_max: i64) -> Vec<DivisorClass> {
    let k = DivisorClass::anticanonical();
    let range: Vec<i64> = (-m_max..=m_max).collect();
    let mut out = Vec::new();
    for d in -d_max..=d_max {
        for &a in &range {
            for &b in &range {
                for &c in &range {
                    for &e in &range {
                        for &g in &range {
                            let cl = DivisorClass::new(d, [a, b, c, e, g]);
                            if cl.dot(&cl) == -1 && cl.dot(&k) == 1 {
                                out.push(cl);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// One of the ten conic fibrations, indexed by the point `i` and `j ∈ {1, 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConicFibration {
    pub i: usize,
    pub j: usize,
    pub fiber_class: DivisorClass,
    pub singular_fibers: Vec<[Line; 2]>,
}

impl ConicFibration {
    pub fn lines(&self) -> Vec<Line> {
        self.singular_fibers.iter().flatten().copied().collect()
    }
}

/// The three ways of splitting four indices into two pairs.
pub fn pairings(four: [usize; 4]) -> [[(usize, usize); 2]; 3] {
    let [a, b, c, d] = four;
    [[(a, b), (c, d)], [(a, c), (b, d)], [(a, d), (b, c)]]
}

pub fn others(i: usize) -> [usize; 4] {
    let v: Vec<usize> = (1..=5).filter(|&k| k != i).collect();
    [v[0], v[1], v[2], v[3]]
}

/// For each `i`: the pencil of lines through `p_i` (`j = 1`) and the pencil
/// of conics through the other four points (`j = 2`).
pub fn conic_fibrations() -> Vec<ConicFibration> {
    let mut out = Vec::new();
    for i in 1..=5 {
        let rest = others(i);
        out.push(ConicFibration {
            i,
            j: 1,
            fiber_class: DivisorClass::hyperplane().add(&DivisorClass::new(0, {
                let mut m = [0; 5];
                m[i - 1] = -1;
                m
            })),
            singular_fibers: rest.iter().map(|&k| [Line::through(k, i), Line::E(k)]).collect(),
        });
        let mut m = [-1; 5];
        m[i - 1] = 0;
        let mut fibers: Vec<[Line; 2]> = pairings(rest)
            .iter()
            .map(|[(a, b), (c, d)]| [Line::through(*a, *b), Line::through(*c, *d)])
            .collect();
        fibers.push([Line::C, Line::E(i)]);
        out.push(ConicFibration {
            i,
            j: 2,
            fiber_class: DivisorClass::new(2, m),
            singular_fibers: fibers,
        });
    }
    out
}

/// Intersection numbers on the projectivized tangent bundle of a surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaNumerology {
    pub k_squared: i64,
    pub c2: i64,
    /// `ζ³ = K² − c₂`, from `ζ² + π*K·ζ + π*c₂ = 0`.
    pub zeta_cubed: i64,
    /// `Σ a_i = −(2ζ)²·ζ` over the sixteen base curves.
    pub multiplicity_sum: i64,
    /// Common value of the `a_i`, when the sum splits evenly.
    pub base_multiplicity: Option<i64>,
    /// `2·c₂ + 2·16`: Euler number after blowing up sixteen rational curves.
    pub euler_number: i64,
}

pub fn zeta_numerology(k_squared: i64, c2: i64) -> ZetaNumerology {
    // π*K·ζ² = −K² and π*c₂·ζ = c₂, so ζ³ = −π*K·ζ² − π*c₂·ζ = K² − c₂
    let zeta_cubed = k_squared - c2;
    let multiplicity_sum = -4 * zeta_cubed;
    let curves = 16;
    ZetaNumerology {
        k_squared,
        c2,
        zeta_cubed,
        multiplicity_sum,
        base_multiplicity: (multiplicity_sum % curves == 0).then_some(multiplicity_sum / curves),
        euler_number: 2 * c2 + 2 * curves,
    }
}

/// Element of the free module on `ζ, L, E_1..E_5`.
pub type ZetaClass = [i64; 7];

/// The two displayed component classes of the reducible member `i`.
pub fn vmrt_classes(i: usize) -> (ZetaClass, ZetaClass) {
    let mut c1 = [1, -1, 1, 1, 1, 1, 1];
    let mut c2 = [1, 1, -1, -1, -1, -1, -1];
    c1[1 + i] -= 2;
    c2[1 + i] += 2;
    (c1, c2)
}

pub fn sums_to_two_zeta(c1: &ZetaClass, c2: &ZetaClass) -> bool {
    let sum: Vec<i64> = c1.iter().zip(c2).map(|(a, b)| a + b).collect();
    sum == [2, 0, 0, 0, 0, 0, 0]
}

pub fn vmrt_class_sum(i: usize) -> bool {
    let (c1, c2) = vmrt_classes(i);
    sums_to_two_zeta(&c1, &c2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn sixteen_lines() {
        let lines = enumerate_lines();
        assert_eq!(lines.len(), 16);
        let k = DivisorClass::anticanonical();
        for l in &lines {
            assert_eq!(l.class().dot(&l.class()), -1);
            assert_eq!(l.class().dot(&k), 1);
        }
        assert_eq!(Line::C.class().dot(&Line::E(5).class()), 1);
        assert_eq!(Line::L(1, 2).class().dot(&Line::L(3, 4).class()), 1);
        assert_eq!(Line::L(1, 2).class().dot(&Line::L(1, 3).class()), 0);
        let brute: BTreeSet<_> = brute_force_lines(2, 1).into_iter().collect();
        let listed: BTreeSet<_> = lines.iter().map(|l| l.class()).collect();
        assert_eq!(brute, listed);
    }

    #[test]
    fn fibrations_partition_lines() {
        let fibs = conic_fibrations();
        assert_eq!(fibs.len(), 10);
        let k = DivisorClass::anticanonical();
        for f in &fibs {
            assert_eq!(f.fiber_class.dot(&f.fiber_class), 0);
            assert_eq!(f.fiber_class.dot(&k), 2);
            assert_eq!(f.singular_fibers.len(), 4);
            for [a, b] in &f.singular_fibers {
                assert_eq!(a.class().add(&b.class()), f.fiber_class);
            }
        }
        for i in 1..=5 {
            let mut all: Vec<Line> = fibs.iter().filter(|f| f.i == i).flat_map(|f| f.lines()).collect();
            all.sort();
            let mut want = enumerate_lines();
            want.sort();
            assert_eq!(all, want);
        }
        let p51 = &fibs[8];
        assert_eq!((p51.i, p51.j), (5, 1));
        assert_eq!(p51.singular_fibers[0], [Line::L(1, 5), Line::E(1)]);
        assert!(fibs[9].singular_fibers.contains(&[Line::C, Line::E(5)]));
    }

    #[test]
    fn numerology() {
        let z = zeta_numerology(4, 8);
        assert_eq!(z.zeta_cubed, -4);
        assert_eq!(z.multiplicity_sum, 16);
        assert_eq!(z.base_multiplicity, Some(1));
        assert_eq!(z.euler_number, 48);
        assert!((1..=5).all(vmrt_class_sum));
        let (mut c1, c2) = vmrt_classes(3);
        c1[4] += 1;
        assert!(!sums_to_two_zeta(&c1, &c2));
    }
}
