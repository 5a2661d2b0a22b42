use crate::error::ContextError;
use crate::ring::{is_projection, El, StarRing};

/// Two projections `p`, `q` with the derived elements
/// `a = pqp`, `b = pq(1 − p)`, `d = (1 − p)q(1 − p)`, `p̄ = 1 − p`, `q̄ = 1 − q`.
#[derive(Clone, Debug)]
pub struct ProjectionPairContext<'r, R: StarRing> {
    pub p: El<'r, R>,
    pub q: El<'r, R>,
    pub a: El<'r, R>,
    pub b: El<'r, R>,
    pub d: El<'r, R>,
    pub p_bar: El<'r, R>,
    pub q_bar: El<'r, R>,
    pub one: El<'r, R>,
}

impl<'r, R: StarRing> ProjectionPairContext<'r, R> {
    pub fn new(ring: &'r R, p: R::Elem, q: R::Elem) -> Result<Self, ContextError> {
        if !is_projection(ring, &p) {
            return Err(ContextError::NotProjection("p"));
        }
        if !is_projection(ring, &q) {
            return Err(ContextError::NotProjection("q"));
        }
        let one = ring.el(ring.one());
        let p = ring.el(p);
        let q = ring.el(q);
        let p_bar = &one - &p;
        let q_bar = &one - &q;
        let a = &p * &q * &p;
        let b = &p * &q * &p_bar;
        let d = &p_bar * &q * &p_bar;
        Ok(ProjectionPairContext { p, q, a, b, d, p_bar, q_bar, one })
    }

    pub fn ring(&self) -> &'r R {
        self.p.ring()
    }

    /// The context for `(1 − p, 1 − q)`.
    pub fn complement(&self) -> Self {
        Self::new(self.ring(), self.p_bar.val().clone(), self.q_bar.val().clone())
            .expect("complements of projections are projections")
    }

    /// The context for `(q, p)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.ring(), self.q.val().clone(), self.p.val().clone()).expect("still projections")
    }

    pub fn zero(&self) -> El<'r, R> {
        self.one.wrap(self.one.ring().zero())
    }
}
