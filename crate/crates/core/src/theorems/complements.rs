use super::{TheoremId, TheoremVerdict, Verdict};
use crate::context::ProjectionPairContext;
use crate::error::TheoremError;
use crate::ring::{verify_mp, El, InverseEngine, StarRing};

/// `(1 − pq)†` assembled from `(p − pqp)†`:
/// `[1 + b*(p−a)](p−a)†(1 + b) − b* − b*b + 1 − p`.
pub fn eq215_formula<'r, R: StarRing>(
    ctx: &ProjectionPairContext<'r, R>,
    dag_p_minus_a: &El<'r, R>,
) -> Result<El<'r, R>, TheoremError> {
    let pa = &ctx.p - &ctx.a;
    if !verify_mp(ctx.ring(), pa.val(), dag_p_minus_a.val()).all {
        return Err(TheoremError::InvalidWitness("not an MP inverse of p - pqp".into()));
    }
    let one = &ctx.one;
    let bs = ctx.b.star();
    let x = (one + &bs * &pa) * dag_p_minus_a * (one + &ctx.b) - &bs - &bs * &ctx.b + one - &ctx.p;
    Ok(x)
}

/// `(p − pqp)† = p·(1 − pq)†·p`.
pub fn pxp_extraction<'r, R: StarRing>(
    ctx: &ProjectionPairContext<'r, R>,
    dag_one_minus_pq: &El<'r, R>,
) -> Result<El<'r, R>, TheoremError> {
    let x = &ctx.one - &ctx.p * &ctx.q;
    if !verify_mp(ctx.ring(), x.val(), dag_one_minus_pq.val()).all {
        return Err(TheoremError::InvalidWitness("not an MP inverse of 1 - pq".into()));
    }
    Ok(&ctx.p * dag_one_minus_pq * &ctx.p)
}

/// Existence of the MP inverse is simultaneous for
/// `1 − pq`, `1 − pqp`, `p − pqp`, `1 − qp`, `1 − qpq`, `q − qpq` in any ring
/// with involution; the conversion formulas between the inverses are checked.
pub fn thm24_battery<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Thm24);
    let (p, q, one) = (&ctx.p, &ctx.q, &ctx.one);
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let qpq = &qp * q;
    let profile = v.profile(&[
        ("1-pq", &(one - &pq)),
        ("1-pqp", &(one - &pqp)),
        ("p-pqp", &(p - &pqp)),
        ("1-qp", &(one - &qp)),
        ("1-qpq", &(one - &qpq)),
        ("q-qpq", &(q - &qpq)),
    ]);
    v.check("six existence flags agree", profile.all_agree());
    profile.observe_into(&mut v);

    conversion_checks(&mut v, "", ctx);
    conversion_checks(&mut v, "[q,p] ", &ctx.swapped());
    v.finish(ctx)
}

fn conversion_checks<R: InverseEngine>(v: &mut Verdict, prefix: &str, ctx: &ProjectionPairContext<'_, R>) {
    let (p, one) = (&ctx.p, &ctx.one);
    let one_minus_pq = one - p * &ctx.q;
    let one_minus_pqp = one - &ctx.a;
    let pa = p - &ctx.a;
    let pa_dag = v.dag(&pa);
    let opq_dag = v.dag(&one_minus_pq);
    let opqp_dag = v.dag(&one_minus_pqp);

    if let (Some(pad), Some(od)) = (&pa_dag, &opqp_dag) {
        v.check(format!("{prefix}(p-pqp)† = p(1-pqp)†"), *pad == p * od);
        v.check(format!("{prefix}(1-pqp)† = (p-pqp)† + 1 - p"), *od == pad + one - p);
        v.check(format!("{prefix}p(1-pqp)† = (1-pqp)†p"), p * od == od * p);
    }
    if let Some(pad) = &pa_dag {
        match eq215_formula(ctx, pad) {
            Ok(x) => {
                v.check(
                    format!("{prefix}eq215 satisfies Penrose for 1-pq"),
                    verify_mp(ctx.ring(), one_minus_pq.val(), x.val()).all,
                );
                v.check(format!("{prefix}eq215 equals engine (1-pq)†"), opq_dag.as_ref() == Some(&x));
            }
            Err(_) => v.check(format!("{prefix}eq215 input certified"), false),
        }
    }
    if let Some(od) = &opq_dag {
        match pxp_extraction(ctx, od) {
            Ok(y) => {
                v.check(
                    format!("{prefix}pxp satisfies Penrose for p-pqp"),
                    verify_mp(ctx.ring(), pa.val(), y.val()).all,
                );
                v.check(format!("{prefix}pxp equals engine (p-pqp)†"), pa_dag.as_ref() == Some(&y));
            }
            Err(_) => v.check(format!("{prefix}pxp input certified"), false),
        }
    }
}

/// The ten elements of the `*`-reducing extension, in order:
/// `1−pq, 1−pqp, p−pqp, p−pq, p−qp, 1−qp, 1−qpq, q−qpq, q−qp, q−pq`.
fn cor25_elements<'r, R: StarRing>(ctx: &ProjectionPairContext<'r, R>) -> Vec<(&'static str, El<'r, R>)> {
    let (p, q, one) = (&ctx.p, &ctx.q, &ctx.one);
    let pq = p * q;
    let qp = q * p;
    let pqp = &pq * p;
    let qpq = &qp * q;
    vec![
        ("(1) 1-pq", one - &pq),
        ("(2) 1-pqp", one - &pqp),
        ("(3) p-pqp", p - &pqp),
        ("(4) p-pq", p - &pq),
        ("(5) p-qp", p - &qp),
        ("(6) 1-qp", one - &qp),
        ("(7) 1-qpq", one - &qpq),
        ("(8) q-qpq", q - &qpq),
        ("(9) q-qp", q - &qp),
        ("(10) q-pq", q - &pq),
    ]
}

fn cor25_verdict<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> Verdict {
    let mut v = Verdict::new(TheoremId::Cor25);
    let elements = cor25_elements(ctx);
    let named: Vec<(&str, &El<'_, R>)> = elements.iter().map(|(n, e)| (*n, e)).collect();
    let profile = v.profile(&named);
    profile.observe_into(&mut v);
    if !ctx.ring().is_star_reducing() {
        v.not_applicable("ring is not *-reducing");
        return v;
    }
    v.check("ten existence flags agree", profile.all_agree());
    if let (Some(opq_dag), Some(pa_dag)) = (profile.witness(0), profile.witness(2)) {
        v.check("(p-pqp)† = (1-pq)†p", *pa_dag == opq_dag * &ctx.p);
    }
    v
}

/// Ten simultaneous existence conditions in a `*`-reducing ring and
/// `(p − pqp)† = (1 − pq)†p`.
pub fn cor25_battery<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    cor25_verdict(ctx).finish(ctx)
}

/// The complemented conditions, checked along two routes: the ten-condition
/// battery on `(1 − p, 1 − q)` and direct evaluation of the listed elements.
pub fn cor26_battery<R: InverseEngine>(ctx: &ProjectionPairContext<'_, R>) -> TheoremVerdict {
    let mut v = Verdict::new(TheoremId::Cor26);
    let (p, q, pb, qb) = (&ctx.p, &ctx.q, &ctx.p_bar, &ctx.q_bar);
    let pq = p * q;
    let qp = q * p;
    let direct = [
        ("(1) p+q-pq", p + q - &pq),
        ("(2) p+p̄qp̄", p + pb * q * pb),
        ("(3) p̄qp̄", pb * q * pb),
        ("(4) q-pq", q - &pq),
        ("(5) q-qp", q - &qp),
        ("(6) p+q-qp", p + q - &qp),
        ("(7) q+q̄pq̄", q + qb * p * qb),
        ("(8) q̄pq̄", qb * p * qb),
        ("(9) p-qp", p - &qp),
        ("(10) p-pq", p - &pq),
    ];
    let named: Vec<(&str, &El<'_, R>)> = direct.iter().map(|(n, e)| (*n, e)).collect();
    let profile = v.profile(&named);
    profile.observe_into(&mut v);
    if !ctx.ring().is_star_reducing() {
        v.not_applicable("ring is not *-reducing");
        return v.finish(ctx);
    }

    let comp = ctx.complement();
    let substituted = cor25_elements(&comp);
    let same_elements = substituted.iter().zip(&direct).all(|((_, s), (_, d))| s == d);
    v.check("substituted and direct elements coincide", same_elements);
    v.check("ten existence flags agree", profile.all_agree());
    v.absorb("[p̄,q̄] ", cor25_verdict(&comp).finish(&comp));
    v.finish(ctx)
}
