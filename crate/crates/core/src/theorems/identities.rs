use super::{TheoremId, TheoremVerdict, Verdict};
use crate::context::ProjectionPairContext;
use crate::error::TheoremError;
use crate::ring::{verify_mp, El, InverseEngine};

/// Dagger identities for `r*r` and `rr*`, plus the `*`-reducing converse.
pub fn lemma21_checks<R: InverseEngine>(r: &El<'_, R>) -> TheoremVerdict {
    let v = lemma21_verdict(r);
    v.finish_with(r.ring(), &[("r", r.val())])
}

fn lemma21_verdict<R: InverseEngine>(r: &El<'_, R>) -> Verdict {
    let mut v = Verdict::new(TheoremId::Lemma21);
    let rs = r.star();
    let rsr = &rs * r;
    let rrs = r * &rs;
    let r_dag = v.dag(r);
    let rsr_dag = v.dag(&rsr);
    let rrs_dag = v.dag(&rrs);

    if let Some(rd) = &r_dag {
        let rs_dag = v.dag(&rs);
        v.check("r* in R†", rs_dag.is_some());
        v.check("(r*)† = (r†)*", rs_dag.as_ref() == Some(&rd.star()));
        v.check("r*r in R†", rsr_dag.is_some());
        v.check("rr* in R†", rrs_dag.is_some());
        if let (Some(rsd), Some(rsr_d)) = (&rs_dag, &rsr_dag) {
            v.check("(r*r)† = r†(r*)†", *rsr_d == rd * rsd);
            v.check("r† = (r*r)†r*", *rd == rsr_d * &rs);
        }
        if let (Some(rsd), Some(rrs_d)) = (&rs_dag, &rrs_dag) {
            v.check("(rr*)† = (r*)†r†", *rrs_d == rsd * rd);
            v.check("r† = r*(rr*)†", *rd == &rs * rrs_d);
        }
    }

    let premise = rsr_dag.is_some() || rrs_dag.is_some();
    if r.ring().is_star_reducing() {
        v.check("r*r or rr* in R† implies r in R†", !premise || r_dag.is_some());
    } else {
        v.observe("r in R†", r_dag.is_some());
        v.observe("r*r in R†", rsr_dag.is_some());
        v.observe("rr* in R†", rrs_dag.is_some());
    }
    v
}

/// Runs the `r*r`/`rr*` identities on `pq`, `pq̄`, `p̄q` and `p − q`.
pub fn lemma21_pair<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Lemma21);
    let pq = &ctx.p * &ctx.q;
    let pqb = &ctx.p * &ctx.q_bar;
    let pbq = &ctx.p_bar * &ctx.q;
    let diff = &ctx.p - &ctx.q;
    for (name, r) in [("pq", &pq), ("pq̄", &pqb), ("p̄q", &pbq), ("p-q", &diff)] {
        let inner = lemma21_verdict(r).finish_with(r.ring(), &[]);
        v.absorb(&format!("[r = {name}] "), inner);
    }
    v.finish(ctx)
}

/// `bb* = (p−a) − (p−a)²`, `b*b = d − d²`, `db* = b*(p−a)`; no preconditions.
pub fn lemma22_identities<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Lemma22);
    let pa = &ctx.p - &ctx.a;
    let bs = ctx.b.star();
    v.check("bb* = (p-a) - (p-a)^2", &ctx.b * &bs == &pa - &pa * &pa);
    v.check("b*b = d - d^2", &bs * &ctx.b == &ctx.d - &ctx.d * &ctx.d);
    v.check("db* = b*(p-a)", &ctx.d * &bs == &bs * &pa);
    v.finish(ctx)
}

/// Range identities for `b` under the existence hypotheses on `pq̄` and `p̄q`,
/// and the difference formula for `(p − q)†`.
pub fn lemma23_identities<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Lemma23);
    let pa = &ctx.p - &ctx.a;
    let b = &ctx.b;
    let bs = b.star();
    let pqb_exists = v.exists(&(&ctx.p * &ctx.q_bar));
    let pbq_exists = v.exists(&(&ctx.p_bar * &ctx.q));

    let pa_dag = if pqb_exists { v.dag(&pa) } else { None };
    let d_dag = if pbq_exists { v.dag(&ctx.d) } else { None };

    if pqb_exists {
        v.check("(1) p-a in R†", pa_dag.is_some());
        if let Some(pad) = &pa_dag {
            v.check("(1) (p-a)(p-a)†b = b", &pa * pad * b == *b);
        }
    }
    if pbq_exists {
        v.check("(2) d in R†", d_dag.is_some());
        if let Some(dd) = &d_dag {
            v.check("(2) bdd† = b", b * &ctx.d * dd == *b);
        }
    }
    if let (Some(pad), Some(dd)) = (&pa_dag, &d_dag) {
        v.check("(3) bd† = (p-a)†b", b * dd == pad * b);
        v.check("(3) d†b* = b*(p-a)†", dd * &bs == &bs * pad);
    }
    if pqb_exists && pbq_exists {
        match diff_mp_formula(ctx) {
            Ok(w) => {
                let diff = &ctx.p - &ctx.q;
                v.check("(4) formula satisfies Penrose for p-q", verify_mp(ctx.ring(), diff.val(), w.val()).all);
                let engine = v.dag(&diff);
                v.check("(4) formula equals engine (p-q)†", engine.as_ref() == Some(&w));
            }
            Err(_) => v.check("(4) formula preconditions", false),
        }
    }
    v.finish(ctx)
}

/// Candidate `q̄(pq̄p)† − q(p̄qp̄)†` for `(p − q)†`.
///
/// Requires `pq̄, p̄q ∈ R†`. The inner daggers come from
/// `(rr*)† = (r†)*r†` with `r = pq̄` and `r = p̄q`. The result is not certified here.
pub fn diff_mp_formula<'r, R: InverseEngine>(ctx: &ProjectionPairContext<'r, R>) -> Result<El<'r, R>, TheoremError> {
    let pqb = &ctx.p * &ctx.q_bar;
    let pbq = &ctx.p_bar * &ctx.q;
    let pqb_dag = pqb.dag().ok_or_else(|| TheoremError::Inapplicable("pq̄ has no MP inverse".into()))?;
    let pbq_dag = pbq.dag().ok_or_else(|| TheoremError::Inapplicable("p̄q has no MP inverse".into()))?;
    // pq̄p = (pq̄)(pq̄)*, p̄qp̄ = (p̄q)(p̄q)*
    let pqbp_dag = pqb_dag.star() * &pqb_dag;
    let pbqpb_dag = pbq_dag.star() * &pbq_dag;
    Ok(&ctx.q_bar * pqbp_dag - &ctx.q * pbqpb_dag)
}
