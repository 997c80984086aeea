use cherednik::exact::scalar::int;
use cherednik::radial::ops::*;
use cherednik::radial::ratdiffop::RatDiffOp;
use cherednik::exact::ratfun::RatFun;
use cherednik::exact::multipoly::MultiPoly;

fn main() {
    let k = int(1);
    let s = shift_operator(2, &k).unwrap();
    println!("S (normalized by {}): {:?}", s.normalization, s.op);
    // candidate: (d1 - d2) + a/(x1-x2) for various a
    for anum in [-4i64, -2, -1, 1, 2, 4] {
        let mut cand = RatDiffOp::d(2, 0).sub(&RatDiffOp::d(2, 1));
        let f = RatFun::new(
            MultiPoly::constant(2, int(anum)),
            &MultiPoly::var(2, 0) - &MultiPoly::var(2, 1),
        ).unwrap();
        cand.add_term(vec![0, 0], f);
        let ok = shift_intertwine_check(&cand, 2, &k, 6).is_ok();
        println!("candidate a = {anum}: intertwines = {ok}");
    }
    // where does the real S fail?
    if let Err(w) = shift_intertwine_check(&s.op, 2, &k, 6) {
        println!("witness: {w}");
    }
}
