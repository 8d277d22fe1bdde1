//! Worked examples, each checked against a hand expansion.

use num_bigint::BigInt;
use qcong::cyclotomic::{cyclotomic, factorial_ratio_signature, lemma61_check, qbinomial_signature, q_integer_signature};
use qcong::families::classical::{chu_check, dixon_limit_check, qbt_check, ChuForm};
use qcong::families::cyclic::{theorem1_sum, theorem2_modulus, theorem62_expression, CyclicSpec, Regime};
use qcong::families::lemma::{lemma21_check, remark_x_identity_check};
use qcong::families::pq::{pq_value, Method, Which};
use qcong::families::{FamilyId, Params, Sign, SumSpec};
use qcong::qkit::{ballot, product_c, q_binomial, super_catalan, BallotForm};
use qcong::{divides, quotient, CycSignature, LaurentPoly, Modulus, Strategy};

fn p(min: i64, cs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_i64s(min, cs)
}

fn build(id: FamilyId, params: &str, sign: Option<Sign>) -> qcong::families::Instance {
    SumSpec::new(id, params.parse::<Params>().unwrap(), sign).build().unwrap()
}

#[test]
fn thm1_smallest_instance() {
    let sum = theorem1_sum(&CyclicSpec::new(vec![1], 0, 0, Sign::Plus), Regime::Proven).unwrap();
    // q^-1 (1+q)(1+q+q^2)
    assert_eq!(sum, p(-1, &[1, 2, 2, 1]));
    let d = Modulus::expanded(p(0, &[1, 2, 2, 1]), "[3][2 ⊂ 1]");
    assert_eq!(quotient(&d, &sum).unwrap(), p(-1, &[1]));
    let v = divides(&d, &LaurentPoly::zero(), Strategy::Both);
    assert!(v.holds && v.quotient.unwrap().is_zero());

    let j1 = theorem1_sum(&CyclicSpec::new(vec![1], 1, 0, Sign::Plus), Regime::Proven).unwrap();
    assert_eq!(j1, p(0, &[1, 2, 2, 1]));
    let minus = theorem1_sum(&CyclicSpec::new(vec![1], 0, 0, Sign::Minus), Regime::Proven).unwrap();
    assert!(minus.is_zero());
}

#[test]
fn strengthened_moduli() {
    let m = theorem2_modulus(&CyclicSpec::new(vec![1], 0, 1, Sign::Plus)).unwrap();
    assert_eq!(m.poly(), p(0, &[1, 2, 2, 1]));
    let m = theorem2_modulus(&CyclicSpec::new(vec![2], 0, 2, Sign::Plus)).unwrap();
    let expect = &(&(&q_binomial(5, 1) * &q_binomial(4, 2)) * &p(0, &[1, 1])) * &p(0, &[1, 1]);
    assert_eq!(m.poly(), expect);
}

#[test]
fn ballot_examples() {
    assert_eq!(ballot(1, 0, BallotForm::Difference).unwrap(), p(1, &[1]));
    assert_eq!(ballot(2, 0, BallotForm::Difference).unwrap(), p(2, &[1, 0, 1]));
    assert_eq!(ballot(2, 0, BallotForm::Quotient).unwrap().eval_at_one(), BigInt::from(2));
    assert!(ballot(3, 3, BallotForm::Difference).unwrap().is_one());

    let plus = build(FamilyId::Thm3, "n=1,s=1,r=0,j=0", Some(Sign::Plus));
    assert_eq!(plus.sum, p(0, &[1, 1]));
    assert!(plus.check(Strategy::Both).holds);
    let minus = build(FamilyId::Thm3, "n=1,s=1,r=0,j=0", Some(Sign::Minus));
    assert!(minus.sum.is_zero());
    assert!(build(FamilyId::Thm3, "n=2,s=3,r=0,j=0", Some(Sign::Plus)).check(Strategy::Both).holds);
}

#[test]
fn super_catalan_examples() {
    assert_eq!(super_catalan(1, 1).unwrap(), p(0, &[1, 1]));
    assert_eq!(super_catalan(0, 3).unwrap(), q_binomial(6, 3));
    // 4! 6! / (5! 2! 3!) = 12
    assert_eq!(super_catalan(2, 3).unwrap().eval_at_one(), BigInt::from(12));

    let i = build(FamilyId::Thm4, "m=1,n=1,s=1,t=1,r=1,j=0", Some(Sign::Plus));
    // [3] q^-1 (1+q)(1+q^2)
    assert_eq!(i.sum, &p(0, &[1, 1, 1]) * &p(-1, &[1, 1, 1, 1]));
    assert!(i.check(Strategy::Both).holds);
    assert!(build(FamilyId::Thm4, "m=1,n=1,s=1,t=1,r=1,j=2", Some(Sign::Plus)).check(Strategy::Both).holds);
}

#[test]
fn cyclic_products() {
    assert_eq!(product_c(&[1], 0).unwrap(), p(0, &[1, 1, 1]));
    assert!(product_c(&[1, 1], 1).unwrap().is_one());
    assert_eq!(product_c(&[2, 1], 1).unwrap(), p(0, &[1, 1, 1, 1]));
}

#[test]
fn cyclotomic_examples() {
    assert_eq!(cyclotomic(1), p(0, &[-1, 1]));
    assert_eq!(cyclotomic(6), p(0, &[1, -1, 1]));
    let s = qbinomial_signature(4, 2).unwrap();
    assert_eq!(s, CycSignature::phi(3).with_factor(4, 1));
    assert_eq!(s.expand().unwrap(), p(0, &[1, 1, 2, 1, 1]));
    assert_eq!(factorial_ratio_signature(&[2, 2], &[2, 1, 1]).unwrap(), CycSignature::phi(2));
    assert_eq!(factorial_ratio_signature(&[4], &[2, 2]).unwrap(), s);
    let six = qbinomial_signature(6, 3).unwrap();
    assert_eq!(six.factors().map(|(d, _)| d).collect::<Vec<_>>(), vec![2, 4, 5, 6]);
    assert!(six.gcd(&q_integer_signature(7).unwrap()).unwrap().is_one());
    assert!(s.gcd(&q_integer_signature(5).unwrap()).unwrap().is_one());
    assert!(lemma61_check(1, 1).unwrap() && lemma61_check(2, 3).unwrap() && lemma61_check(3, 2).unwrap());
}

#[test]
fn factorial_prefactor_form() {
    let one = theorem62_expression(&CyclicSpec::new(vec![1], 0, 0, Sign::Plus), Regime::Proven).unwrap();
    assert_eq!(one, p(-1, &[1]));
    assert!(theorem62_expression(&CyclicSpec::new(vec![1, 1], 0, 0, Sign::Plus), Regime::Proven).is_ok());
}

#[test]
fn pochhammer_identity_examples() {
    let c = lemma21_check(1, 0, 1).unwrap();
    assert!(c.equal);
    assert_eq!(c.lhs, p(-1, &[1, 2, 2, 1]));
    assert!(lemma21_check(2, 1, 3).unwrap().lhs.is_zero());
    let c = lemma21_check(1, 0, 4).unwrap();
    assert!(c.equal);
    assert_eq!(c.lhs, &p(0, &[1, 2, 2, 1]) * &p(0, &[1, -1]));
    assert!(remark_x_identity_check(1, 1, 2).unwrap().equal);
    assert!(remark_x_identity_check(2, 3, 1).unwrap().equal);
    assert!(remark_x_identity_check(1, 1, 0).unwrap().degenerate);
    assert!(build(FamilyId::Thm22, "n=2,r=1,s=1,v=1", None).check(Strategy::Both).holds);
    assert!(build(FamilyId::Thm22, "n=1,r=2,s=0,v=3", None).check(Strategy::Both).holds);
}

#[test]
fn pq_examples() {
    let x1 = p(0, &[1, 2, 2, 1]);
    assert_eq!(pq_value(Which::P, 1, 0, 0, Method::Direct).unwrap(), x1.clone().shift(-1));
    assert_eq!(pq_value(Which::P, 1, 0, 1, Method::Direct).unwrap(), x1.shift(-2));
    assert_eq!(pq_value(Which::Q, 1, 0, 1, Method::Direct).unwrap().to_string(), "-q^-1 - 2 - 2*q - q^2");
    let x2 = &q_binomial(5, 1) * &q_binomial(4, 2);
    let b2 = p(0, &[1, 1]);
    let p2 = (&(&(&b2 * &b2) * &b2) * &x2).shift(-1);
    assert_eq!(pq_value(Which::P, 2, 1, 2, Method::Recurrence).unwrap(), p2);
    let q01 = &x2 * &(&p(0, &[1, -1]) * &p(0, &[1, 0, -1]));
    assert_eq!(pq_value(Which::Q, 2, 1, 0, Method::Direct).unwrap(), q01);
    assert!(pq_value(Which::Q, 3, 0, 0, Method::Direct).unwrap().is_zero());
}

#[test]
fn classical_examples() {
    let c = qbt_check(2, -1).unwrap();
    assert!(c.equal && c.lhs.is_zero());
    let c = dixon_limit_check(1).unwrap();
    assert!(c.equal);
    assert_eq!(c.lhs, p(0, &[1, 0, -1]));
    let c = chu_check(1, 1, 0, ChuForm::Standard).unwrap();
    assert!(c.equal);
    assert_eq!(c.lhs, p(0, &[1, 1, 1]));
}

#[test]
fn corollary_and_conjecture_examples() {
    let c = build(FamilyId::C63a, "n=2,r=1,s=1,t=1,j=0", Some(Sign::Plus));
    assert_eq!(c.modulus.poly(), cyclotomic(4));
    assert!(c.check(Strategy::Both).holds);
    let c = build(FamilyId::C71, "a=1,m=1,n=1,j=0,r=0", Some(Sign::Plus));
    assert_eq!(c.modulus.poly(), p(0, &[1, 2, 2, 1]));
    assert!(c.check(Strategy::Both).holds);
    // [2n+2m-1][2n+1 ⊂ n] at m = 2, n = 1 is [5][3 ⊂ 1].
    let c = build(FamilyId::C77, "m=2,n=1,a=1:1,j=0,r=0", Some(Sign::Plus));
    assert_eq!(c.modulus.poly(), &q_binomial(5, 1) * &q_binomial(3, 1));
    assert!(c.check(Strategy::Both).holds);

    let c = build(FamilyId::ConjFinal, "m=1,n=1,r=1,j=0", Some(Sign::Plus));
    assert!(c.modulus.poly().is_one() && c.check(Strategy::Both).holds);
    let c = build(FamilyId::ConjFinal, "m=2,n=2,r=1:2,j=1", Some(Sign::Plus));
    assert_eq!(c.modulus.poly(), cyclotomic(4));
    assert!(c.check(Strategy::Both).holds);
    let c = build(FamilyId::ConjAllJ, "thm=1,m=1,n=2,j=3,r=0", Some(Sign::Plus));
    assert!(c.check(Strategy::Both).holds);
}
