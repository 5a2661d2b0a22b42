use super::{TheoremId, TheoremVerdict, Verdict};
use crate::context::ProjectionPairContext;
use crate::ring::{verify_drazin, El, InverseEngine};

/// Drazin inverse from the engine, certified at its index and checked minimal.
fn certified_drazin<R: InverseEngine>(v: &mut Verdict, name: &str, x: &El<'_, R>) -> Option<usize> {
    let (w, k) = x.drazin()?;
    let ring = x.ring();
    let valid = verify_drazin(ring, x.val(), w.val(), k).valid();
    let minimal = k == 0 || !verify_drazin(ring, x.val(), w.val(), k - 1).index_eq;
    v.check(format!("Drazin witness of {name} certified"), valid && minimal);
    Some(k)
}

/// `b − b* ∈ R^d` iff `bb* ∈ R^d`, with `ind(bb*) ≤ max(1, ind((b − b*)²))`.
///
/// The unguarded inequality `ind(bb*) ≤ ind((b − b*)²)` is recorded as an
/// observation: it fails when `(b − b*)²` is invertible (index 0) while
/// `bb*` has index 1.
pub fn lemma211_check<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Lemma211);
    let bs = ctx.b.star();
    let skew = &ctx.b - &bs;
    let bbs = &ctx.b * &bs;
    let skew_index = certified_drazin(&mut v, "b-b*", &skew);
    let bbs_index = certified_drazin(&mut v, "bb*", &bbs);
    v.check("b-b* in R^d iff bb* in R^d", skew_index.is_some() == bbs_index.is_some());
    if let (Some(_), Some(bbs_k)) = (skew_index, bbs_index) {
        let sq = &skew * &skew;
        match certified_drazin(&mut v, "(b-b*)²", &sq) {
            Some(sq_k) => {
                v.check("ind(bb*) <= max(1, ind((b-b*)²))", bbs_k <= sq_k.max(1));
                v.observe("ind(bb*) <= ind((b-b*)²)", bbs_k <= sq_k);
            }
            None => v.check("(b-b*)² in R^d", false),
        }
    }
    v.finish(ctx)
}

fn lemma212_verdict<R: InverseEngine>(r: &El<'_, R>) -> Verdict {
    let mut v = Verdict::new(TheoremId::Lemma212);
    let r2 = r * r;
    let r_index = certified_drazin(&mut v, "r", r);
    for (label, s) in [("r+r²", r + &r2), ("r-r²", r - &r2)] {
        if let Some(s_k) = certified_drazin(&mut v, label, &s) {
            v.check(format!("{label} in R^d implies r in R^d"), r_index.is_some());
            if let Some(r_k) = r_index {
                v.check(format!("ind(r) <= ind({label})"), r_k <= s_k);
            }
        }
    }
    v
}

/// If `r ± r² ∈ R^d` then `r ∈ R^d` with `ind(r) ≤ ind(r ± r²)`.
pub fn lemma212_check<R: InverseEngine>(r: &El<'_, R>) -> TheoremVerdict {
    lemma212_verdict(r).finish_with(r.ring(), &[("r", r.val())])
}

/// Runs the index comparison on `pq`, `pqp`, `p − q` and `p + q`.
pub fn lemma212_pair<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Lemma212);
    let candidates =
        [("pq", &ctx.p * &ctx.q), ("pqp", ctx.a.clone()), ("p-q", &ctx.p - &ctx.q), ("p+q", &ctx.p + &ctx.q)];
    for (name, r) in &candidates {
        let inner = lemma212_verdict(r).finish_with(r.ring(), &[]);
        v.absorb(&format!("[r = {name}] "), inner);
    }
    v.finish(ctx)
}
