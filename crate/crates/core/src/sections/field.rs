use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use super::SectionError;
use crate::poly::{MPoly, Monomial, VarTable};
use crate::rat::{int, Rat};

/// Number of coefficient slots of a degree-4 field.
pub const NUM_SLOTS: usize = 45;
const PER_COMPONENT: usize = 15;

/// Variables `x, y` of the affine plane.
pub fn xy_vars() -> &'static VarTable {
    static T: OnceLock<VarTable> = OnceLock::new();
    T.get_or_init(|| VarTable::of(&["x", "y"]))
}

/// Variables `x, y, u, v` of the cotangent chart.
pub fn chart_vars() -> &'static VarTable {
    static T: OnceLock<VarTable> = OnceLock::new();
    T.get_or_init(|| VarTable::of(&["x", "y", "u", "v"]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Component {
    F,
    G,
    H,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::F, Component::G, Component::H];

    fn letter(self) -> char {
        match self {
            Component::F => 'f',
            Component::G => 'g',
            Component::H => 'h',
        }
    }
}

/// Coefficient `f_{i,j}`, `g_{i,j}` or `h_{i,j}` of `x^i y^j`, with `i + j ≤ 4`.
///
/// Slots are numbered component by component; inside a component by degree,
/// and inside a degree by descending power of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub comp: Component,
    pub i: u32,
    pub j: u32,
}

impl Slot {
    pub fn new(comp: Component, i: u32, j: u32) -> Self {
        assert!(i + j <= 4, "slot degree above four");
        Slot { comp, i, j }
    }

    pub fn f(i: u32, j: u32) -> Self {
        Self::new(Component::F, i, j)
    }

    pub fn g(i: u32, j: u32) -> Self {
        Self::new(Component::G, i, j)
    }

    pub fn h(i: u32, j: u32) -> Self {
        Self::new(Component::H, i, j)
    }

    pub fn index(self) -> usize {
        let d = (self.i + self.j) as usize;
        let comp = self.comp as usize;
        comp * PER_COMPONENT + d * (d + 1) / 2 + (d - self.i as usize)
    }

    pub fn from_index(k: usize) -> Self {
        assert!(k < NUM_SLOTS, "slot index out of range");
        let comp = Component::ALL[k / PER_COMPONENT];
        let mut r = k % PER_COMPONENT;
        let mut d = 0;
        while r > d {
            r -= d + 1;
            d += 1;
        }
        let i = (d - r) as u32;
        Slot {
            comp,
            i,
            j: d as u32 - i,
        }
    }

    pub fn all() -> impl Iterator<Item = Slot> {
        (0..NUM_SLOTS).map(Slot::from_index)
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.comp.letter(), self.i, self.j)
    }
}

/// Symmetric 2-tensor field `f ∂x² + g ∂y² + h ∂x∂y` with coefficients of
/// degree at most four in `x, y`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymField {
    f: MPoly,
    g: MPoly,
    h: MPoly,
}

impl SymField {
    pub fn new(f: MPoly, g: MPoly, h: MPoly) -> Result<Self, SectionError> {
        for (name, p) in [("f", &f), ("g", &g), ("h", &h)] {
            if p.vars() != xy_vars() {
                return Err(SectionError::Field(format!("{name} must be a polynomial in x, y")));
            }
            if p.degree().unwrap_or(0) > 4 {
                return Err(SectionError::Field(format!("deg {name} exceeds 4")));
            }
        }
        Ok(SymField { f, g, h })
    }

    pub fn zero() -> Self {
        let z = MPoly::zero(xy_vars());
        SymField {
            f: z.clone(),
            g: z.clone(),
            h: z,
        }
    }

    /// Field from its 45 slot values.
    pub fn from_slots(values: &[Rat]) -> Self {
        assert_eq!(values.len(), NUM_SLOTS, "45 slot values");
        let mut parts = [MPoly::zero(xy_vars()), MPoly::zero(xy_vars()), MPoly::zero(xy_vars())];
        for (k, v) in values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let s = Slot::from_index(k);
            parts[s.comp as usize] += MPoly::term(xy_vars(), v.clone(), &[s.i, s.j]);
        }
        let [f, g, h] = parts;
        SymField { f, g, h }
    }

    pub fn slots(&self) -> Vec<Rat> {
        Slot::all().map(|s| self.coefficient(s)).collect()
    }

    pub fn coefficient(&self, s: Slot) -> Rat {
        self.component(s.comp).coefficient_of(&[s.i, s.j])
    }

    pub fn component(&self, c: Component) -> &MPoly {
        match c {
            Component::F => &self.f,
            Component::G => &self.g,
            Component::H => &self.h,
        }
    }

    pub fn f(&self) -> &MPoly {
        &self.f
    }

    pub fn g(&self) -> &MPoly {
        &self.g
    }

    pub fn h(&self) -> &MPoly {
        &self.h
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero() && self.h.is_zero()
    }

    pub fn add(&self, other: &SymField) -> SymField {
        SymField {
            f: &self.f + &other.f,
            g: &self.g + &other.g,
            h: &self.h + &other.h,
        }
    }

    pub fn scale(&self, c: &Rat) -> SymField {
        SymField {
            f: self.f.scale(c),
            g: self.g.scale(c),
            h: self.h.scale(c),
        }
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: &Rat, other: &SymField, b: &Rat) -> SymField {
        self.scale(a).add(&other.scale(b))
    }

    /// The fiberwise quadratic `f u² + g v² + h uv` on the cotangent chart.
    pub fn fiber_quadratic(&self) -> MPoly {
        let t = chart_vars();
        let lift = |p: &MPoly| p.embed(t).expect("x, y are chart variables");
        let u = MPoly::var_at(t, 2);
        let v = MPoly::var_at(t, 3);
        &(&(&lift(&self.f) * &u.pow(2)) + &(&lift(&self.g) * &v.pow(2))) + &(&lift(&self.h) * &(&u * &v))
    }

    /// Coefficients `(f, g, h)` at an affine point.
    pub fn at(&self, x: &Rat, y: &Rat) -> [Rat; 3] {
        let pt = [x.clone(), y.clone()];
        [self.f.eval_at(&pt), self.g.eval_at(&pt), self.h.eval_at(&pt)]
    }

    /// Components with `x` and `y` exchanged, also exchanging the roles of
    /// `f` and `g`: the same tensor in the swapped coordinates.
    pub fn swap_xy(&self) -> SymField {
        let swap = |p: &MPoly| {
            MPoly::from_terms(
                xy_vars(),
                p.terms().map(|(m, c)| {
                    let e = m.exponents();
                    (Monomial::from_exponents(vec![e[1], e[0]]), c.clone())
                }),
            )
        };
        SymField {
            f: swap(&self.g),
            g: swap(&self.f),
            h: swap(&self.h),
        }
    }

    /// Sample field with small integer coefficients in every slot, used by
    /// tests and examples as a generic non-section.
    pub fn from_seed_values(values: impl IntoIterator<Item = i64>) -> SymField {
        let v: Vec<Rat> = values.into_iter().take(NUM_SLOTS).map(int).collect();
        let mut full = v;
        full.resize(NUM_SLOTS, Rat::zero());
        SymField::from_slots(&full)
    }
}

impl fmt::Display for SymField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f = {}; g = {}; h = {}", self.f, self.g, self.h)
    }
}

impl Serialize for SymField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("SymField", 3)?;
        st.serialize_field("f", &self.f.to_string())?;
        st.serialize_field("g", &self.g.to_string())?;
        st.serialize_field("h", &self.h.to_string())?;
        st.end()
    }
}
