use super::{TheoremId, TheoremVerdict, Verdict};
use crate::context::ProjectionPairContext;
use crate::ring::{verify_mp, El, InverseEngine};

/// For `x` with `x* = ±x` and `x ∈ R†`, the MP inverse must coincide with the
/// group inverse (`xR = x*R`). `None` when the gate does not apply.
pub fn self_adjoint_gate<R: InverseEngine>(x: &El<'_, R>) -> Option<bool> {
    let xs = x.star();
    if xs != *x && xs != -x {
        return None;
    }
    let dag = x.dag()?;
    let group = x.ring().group_inverse(x.val());
    Some(group.as_ref() == Some(dag.val()))
}

fn gate_check<R: InverseEngine>(v: &mut Verdict, name: &str, x: &El<'_, R>) {
    if let Some(ok) = self_adjoint_gate(x) {
        v.check(format!("({name})† = ({name})^#"), ok);
    }
}

/// `pq − qp ∈ R†` iff `pq ∈ R†` and `p − q ∈ R†` (`*`-reducing rings).
///
/// Identities used along the way that hold in any ring with involution are
/// asserted everywhere; the biconditional only on `*`-reducing instances.
pub fn thm213_check<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Thm213);
    let ring = ctx.ring();
    let (p, q) = (&ctx.p, &ctx.q);
    let pq = p * q;
    let comm = &pq - q * p;
    let diff = p - q;
    let comm_dag = v.dag(&comm);
    let pq_dag = v.dag(&pq);
    let diff_dag = v.dag(&diff);

    if let Some(dd) = &diff_dag {
        let sq = &diff * &diff;
        v.check("[(p-q)²]† = [(p-q)†]²", verify_mp(ring, sq.val(), (dd * dd).val()).all);
    }
    if let Some(cd) = &comm_dag {
        gate_check(&mut v, "pq-qp", &comm);
        let sq = &comm * &comm;
        v.check("[(pq-qp)²]† = [(pq-qp)†]²", verify_mp(ring, sq.val(), (cd * cd).val()).all);
    }
    if let (Some(_), Some(dd)) = (&pq_dag, &diff_dag) {
        let pqp_dag = v.dag(&ctx.a);
        v.check("pq in R† implies pqp in R†", pqp_dag.is_some());
        if let Some(ad) = pqp_dag {
            let bbs = &ctx.b * ctx.b.star();
            let cand = ad * dd * dd;
            v.check("(pqp)†[(p-q)†]² is the MP inverse of bb*", verify_mp(ring, bbs.val(), cand.val()).all);
        }
    }

    let left = comm_dag.is_some();
    let right = pq_dag.is_some() && diff_dag.is_some();
    if ring.is_star_reducing() {
        v.check("pq-qp in R† iff (pq in R† and p-q in R†)", left == right);
    } else {
        v.observe("pq-qp in R†", left);
        v.observe("pq in R† and p-q in R†", right);
    }
    v.finish(ctx)
}

/// `pq + qp ∈ R†` iff `p + q ∈ R†` and `pq ∈ R†` (`*`-reducing rings), with
/// `(pq + qp)† = (p + q)†(p + q − 1)†`.
pub fn thm214_check<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Thm214);
    let ring = ctx.ring();
    let (p, q, one) = (&ctx.p, &ctx.q, &ctx.one);
    let pq = p * q;
    let anti = &pq + q * p;
    let sum = p + q;
    let shifted = &sum - one;
    let anti_dag = v.dag(&anti);
    let sum_dag = v.dag(&sum);
    let shifted_dag = v.dag(&shifted);
    let pq_dag = v.dag(&pq);

    if let (Some(sd), Some(hd)) = (&sum_dag, &shifted_dag) {
        let w = sd * hd;
        v.check("(p+q)†(p+q-1)† satisfies Penrose for pq+qp", verify_mp(ring, anti.val(), w.val()).all);
        v.check("(pq+qp)† = (p+q)†(p+q-1)†", anti_dag.as_ref() == Some(&w));
        v.check("(p+q)† and (p+q-1)† commute", w == hd * sd);
    }
    if anti_dag.is_some() {
        gate_check(&mut v, "pq+qp", &anti);
    }
    if sum_dag.is_some() {
        gate_check(&mut v, "p+q", &sum);
    }
    if shifted_dag.is_some() {
        gate_check(&mut v, "p+q-1", &shifted);
    }

    let left = anti_dag.is_some();
    let right = sum_dag.is_some() && pq_dag.is_some();
    if ring.is_star_reducing() {
        v.check("pq+qp in R† iff (p+q in R† and pq in R†)", left == right);
        v.check("pq in R† implies p+q-1 in R†", pq_dag.is_none() || shifted_dag.is_some());
    } else {
        v.observe("pq+qp in R†", left);
        v.observe("p+q in R† and pq in R†", right);
    }
    v.finish(ctx)
}
