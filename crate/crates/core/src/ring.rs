//! Rings with unity and involution, and the definitional predicates on them.
//!
//! Nothing in this module computes an inverse. Solvers live with the concrete
//! instances ([`crate::matrix`], [`crate::algebra`]); the functions here only
//! certify candidate witnesses against the defining equations.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::TheoremError;

/// An associative ring with unity and an involution `a ↦ a*`.
///
/// Equality of elements is exact.
pub trait StarRing: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    /// Whether `a*a = 0` forces `a = 0` in this instance.
    fn is_star_reducing(&self) -> bool;

    /// Short identifier of the instance, e.g. `Q^2x2` or `example26`.
    fn ring_id(&self) -> String;

    /// Serialization of an element in the instance's file format.
    fn render(&self, a: &Self::Elem) -> String;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    fn el(&self, val: Self::Elem) -> El<'_, Self>
    where
        Self: Sized,
    {
        El { ring: self, val }
    }
}

/// Instance-specific inverse engines: a constructive solver or an exhaustive search.
pub trait InverseEngine: StarRing {
    /// The Moore-Penrose inverse, or `None` when the element is outside R†.
    fn mp_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// The Drazin inverse with its index, or `None` when none exists.
    fn drazin_inverse(&self, a: &Self::Elem) -> Option<(Self::Elem, usize)>;

    fn group_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        match self.drazin_inverse(a) {
            Some((g, k)) if k <= 1 => Some(g),
            _ => None,
        }
    }
}

/// An element paired with its ring, so formulas can be written with operators.
pub struct El<'r, R: StarRing> {
    ring: &'r R,
    val: R::Elem,
}

impl<'r, R: StarRing> Clone for El<'r, R> {
    fn clone(&self) -> Self {
        El { ring: self.ring, val: self.val.clone() }
    }
}

impl<'r, R: StarRing> Debug for El<'r, R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.val.fmt(f)
    }
}

impl<'r, R: StarRing> PartialEq for El<'r, R> {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val
    }
}

impl<'r, R: StarRing> El<'r, R> {
    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn val(&self) -> &R::Elem {
        &self.val
    }

    pub fn into_val(self) -> R::Elem {
        self.val
    }

    pub fn star(&self) -> Self {
        El { ring: self.ring, val: self.ring.star(&self.val) }
    }

    pub fn pow(&self, k: usize) -> Self {
        El { ring: self.ring, val: self.ring.pow(&self.val, k) }
    }

    pub fn is_zero(&self) -> bool {
        self.ring.is_zero(&self.val)
    }

    pub fn wrap(&self, val: R::Elem) -> Self {
        El { ring: self.ring, val }
    }
}

impl<'r, R: InverseEngine> El<'r, R> {
    /// Moore-Penrose inverse from the instance engine.
    pub fn dag(&self) -> Option<Self> {
        self.ring.mp_inverse(&self.val).map(|v| self.wrap(v))
    }

    pub fn drazin(&self) -> Option<(Self, usize)> {
        self.ring.drazin_inverse(&self.val).map(|(v, k)| (self.wrap(v), k))
    }
}

macro_rules! el_binop {
    ($tr:ident, $method:ident, $ring_fn:ident) => {
        impl<'r, R: StarRing> $tr<El<'r, R>> for El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: El<'r, R>) -> El<'r, R> {
                El { ring: self.ring, val: self.ring.$ring_fn(&self.val, &rhs.val) }
            }
        }
        impl<'r, R: StarRing> $tr<&El<'r, R>> for El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: &El<'r, R>) -> El<'r, R> {
                El { ring: self.ring, val: self.ring.$ring_fn(&self.val, &rhs.val) }
            }
        }
        impl<'r, R: StarRing> $tr<El<'r, R>> for &El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: El<'r, R>) -> El<'r, R> {
                El { ring: self.ring, val: self.ring.$ring_fn(&self.val, &rhs.val) }
            }
        }
        impl<'r, R: StarRing> $tr<&El<'r, R>> for &El<'r, R> {
            type Output = El<'r, R>;
            fn $method(self, rhs: &El<'r, R>) -> El<'r, R> {
                El { ring: self.ring, val: self.ring.$ring_fn(&self.val, &rhs.val) }
            }
        }
    };
}

el_binop!(Add, add, add);
el_binop!(Sub, sub, sub);
el_binop!(Mul, mul, mul);

impl<'r, R: StarRing> Neg for El<'r, R> {
    type Output = El<'r, R>;
    fn neg(self) -> El<'r, R> {
        El { ring: self.ring, val: self.ring.neg(&self.val) }
    }
}

impl<'r, R: StarRing> Neg for &El<'r, R> {
    type Output = El<'r, R>;
    fn neg(self) -> El<'r, R> {
        El { ring: self.ring, val: self.ring.neg(&self.val) }
    }
}

/// Truth values of the four Penrose equations for a candidate `b` of `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PenroseReport {
    /// aba = a
    pub eq1: bool,
    /// bab = b
    pub eq2: bool,
    /// (ab)* = ab
    pub eq3: bool,
    /// (ba)* = ba
    pub eq4: bool,
    pub all: bool,
}

/// Truth values of the Drazin equations at a fixed index `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrazinReport {
    pub commutes: bool,
    pub inner: bool,
    pub index_eq: bool,
    pub k: usize,
}

impl DrazinReport {
    pub fn valid(&self) -> bool {
        self.commutes && self.inner && self.index_eq
    }
}

pub fn is_projection<R: StarRing>(ring: &R, e: &R::Elem) -> bool {
    ring.mul(e, e) == *e && ring.star(e) == *e
}

pub fn verify_mp<R: StarRing>(ring: &R, a: &R::Elem, cand: &R::Elem) -> PenroseReport {
    let ab = ring.mul(a, cand);
    let ba = ring.mul(cand, a);
    let eq1 = ring.mul(&ab, a) == *a;
    let eq2 = ring.mul(&ba, cand) == *cand;
    let eq3 = ring.star(&ab) == ab;
    let eq4 = ring.star(&ba) == ba;
    PenroseReport { eq1, eq2, eq3, eq4, all: eq1 && eq2 && eq3 && eq4 }
}

pub fn verify_drazin<R: StarRing>(ring: &R, a: &R::Elem, cand: &R::Elem, k: usize) -> DrazinReport {
    let commutes = ring.mul(a, cand) == ring.mul(cand, a);
    let inner = ring.mul(&ring.mul(cand, a), cand) == *cand;
    let a_k = ring.pow(a, k);
    let index_eq = ring.mul(&ring.mul(&a_k, a), cand) == a_k;
    DrazinReport { commutes, inner, index_eq, k }
}

/// Whether `a` is EP, i.e. `a·a† = a†·a`, given a certified MP inverse.
pub fn is_ep<R: StarRing>(ring: &R, a: &R::Elem, a_dag: &R::Elem) -> Result<bool, TheoremError> {
    if !verify_mp(ring, a, a_dag).all {
        return Err(TheoremError::InvalidWitness("candidate does not satisfy the Penrose equations".into()));
    }
    Ok(ring.mul(a, a_dag) == ring.mul(a_dag, a))
}

/// Exhaustive `*`-reducing test over an explicit element list: returns a nonzero
/// `a` with `a*a = 0` if one exists.
pub fn star_reducing_witness<'a, R, I>(ring: &R, elements: I) -> Option<R::Elem>
where
    R: StarRing,
    R::Elem: 'a,
    I: IntoIterator<Item = &'a R::Elem>,
{
    elements.into_iter().find(|a| !ring.is_zero(a) && ring.is_zero(&ring.mul(&ring.star(a), a))).cloned()
}
