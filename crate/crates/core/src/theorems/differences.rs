use super::identities::diff_mp_formula;
use super::{TheoremId, TheoremVerdict, Verdict};
use crate::context::ProjectionPairContext;
use crate::ring::{verify_mp, El, InverseEngine, StarRing};

/// `p − q ∈ R†` iff both `pq̄` and `p̄q` are, in any ring with involution, with
/// `(pq̄)† = (p − q)†p`.
pub fn thm27_check<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Thm27);
    let ring = ctx.ring();
    let (p, q) = (&ctx.p, &ctx.q);
    let pqb = p * &ctx.q_bar;
    let pbq = &ctx.p_bar * q;
    let diff = p - q;
    let pqb_dag = v.dag(&pqb);
    let pbq_dag = v.dag(&pbq);
    let diff_dag = v.dag(&diff);
    let left = pqb_dag.is_some() && pbq_dag.is_some();
    v.check("pq̄, p̄q in R† iff p-q in R†", left == diff_dag.is_some());

    if let Some(dd) = &diff_dag {
        let x = dd * p;
        v.check("(p-q)†p satisfies Penrose for pq̄", verify_mp(ring, pqb.val(), x.val()).all);
        v.check("(pq̄)† = (p-q)†p", pqb_dag.as_ref() == Some(&x));
        let y = -(dd * &ctx.p_bar);
        v.check("-(p-q)†p̄ satisfies Penrose for p̄q", verify_mp(ring, pbq.val(), y.val()).all);
        let sq = &diff * &diff;
        v.check("[(p-q)²]† = [(p-q)†]²", verify_mp(ring, sq.val(), (dd * dd).val()).all);
        v.check("p[(p-q)†]² = [(p-q)†]²p", p * dd * dd == dd * dd * p);
    }
    if left {
        if let Ok(w) = diff_mp_formula(ctx) {
            v.check("difference formula satisfies Penrose for p-q", verify_mp(ring, diff.val(), w.val()).all);
        }
    }
    v.finish(ctx)
}

fn star_reducing_flags<R: InverseEngine>(
    id: TheoremId,
    ctx: &ProjectionPairContext<'_, R>,
    entries: &[(&str, &El<'_, R>)],
) -> TheoremVerdict {
    let mut v = Verdict::new(id);
    let profile = v.profile(entries);
    profile.observe_into(&mut v);
    if ctx.ring().is_star_reducing() {
        v.check("existence flags agree", profile.all_agree());
    } else {
        v.not_applicable("ring is not *-reducing");
    }
    v.finish(ctx)
}

/// `pq̄`, `p − q`, `p̄q` are simultaneously MP invertible in a `*`-reducing ring.
pub fn cor28_battery<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let pqb = &ctx.p * &ctx.q_bar;
    let diff = &ctx.p - &ctx.q;
    let pbq = &ctx.p_bar * &ctx.q;
    star_reducing_flags(TheoremId::Cor28, ctx, &[("pq̄", &pqb), ("p-q", &diff), ("p̄q", &pbq)])
}

/// `p̄q̄`, `1 − p − q`, `pq` are simultaneously MP invertible in a `*`-reducing ring.
pub fn lemma210_battery<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let pbqb = &ctx.p_bar * &ctx.q_bar;
    let s = &ctx.one - &ctx.p - &ctx.q;
    let pq = &ctx.p * &ctx.q;
    star_reducing_flags(TheoremId::Lemma210, ctx, &[("p̄q̄", &pbqb), ("1-p-q", &s), ("pq", &pq)])
}

fn chain_check<'r, R: StarRing>(v: &mut Verdict, label: &str, exprs: Vec<(&str, Option<El<'r, R>>)>) {
    let all_exist = exprs.iter().all(|(_, e)| e.is_some());
    v.check(format!("{label}: all required inverses exist"), all_exist);
    if !all_exist {
        return;
    }
    let (first_name, first) = (exprs[0].0, exprs[0].1.clone().expect("checked"));
    for (name, e) in &exprs[1..] {
        v.check(format!("{label}: {first_name} = {name}"), e.as_ref() == Some(&first));
    }
}

/// The two chains of equal expressions built from the MP inverses of
/// `1 − pq`, `pq̄p`, `pq̄`, `q̄p`, `p − q` (and their complements) in a
/// `*`-reducing ring where they exist.
pub fn cor29_chains<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Cor29);
    if !ctx.ring().is_star_reducing() {
        v.not_applicable("ring is not *-reducing");
        return v.finish(ctx);
    }
    let (p, q, pb, qb, one) = (&ctx.p, &ctx.q, &ctx.p_bar, &ctx.q_bar, &ctx.one);
    let pqb = p * qb;
    if !v.exists(&pqb) {
        v.not_applicable("pq̄ has no MP inverse");
        return v.finish(ctx);
    }

    let pqbp = &pqb * p;
    let qbp = qb * p;
    let chain1 = vec![
        ("(1-pq)†pq̄p", v.dag(&(one - p * q)).map(|x| x * &pqbp)),
        ("pq̄(pq̄p)†", v.dag(&pqbp).map(|x| &pqb * x)),
        ("pq̄p(1-qp)†", v.dag(&(one - q * p)).map(|x| &pqbp * x)),
        ("p(pq̄)†", v.dag(&pqb).map(|x| p * x)),
        ("(q̄p)†p", v.dag(&qbp).map(|x| x * p)),
        ("p(p-q)†p", v.dag(&(p - q)).map(|x| p * x * p)),
    ];
    chain_check(&mut v, "chain 1", chain1);

    let pbq = pb * q;
    let pbqpb = &pbq * pb;
    let qpb = q * pb;
    let chain2 = vec![
        ("(p+p̄q)†p̄qp̄", v.dag(&(p + &pbq)).map(|x| x * &pbqpb)),
        ("(q+pq̄)†p̄qp̄", v.dag(&(q + p * qb)).map(|x| x * &pbqpb)),
        ("p̄q(p̄qp̄)†", v.dag(&pbqpb).map(|x| &pbq * x)),
        ("p̄qp̄(p+qp̄)†", v.dag(&(p + &qpb)).map(|x| &pbqpb * x)),
        ("p̄qp̄(q+q̄p)†", v.dag(&(q + qb * p)).map(|x| &pbqpb * x)),
        ("p̄(p̄q)†", v.dag(&pbq).map(|x| pb * x)),
        ("(qp̄)†p̄", v.dag(&qpb).map(|x| x * pb)),
        ("p̄(q-p)†p̄", v.dag(&(q - p)).map(|x| pb * x * pb)),
    ];
    chain_check(&mut v, "chain 2", chain2);
    v.finish(ctx)
}
