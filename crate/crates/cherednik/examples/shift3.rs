use cherednik::exact::scalar::int;
use cherednik::radial::ops::*;
use std::time::Instant;

fn main() {
    for k in [int(1), int(2)] {
        let t0 = Instant::now();
        let s = shift_operator(3, &k).unwrap();
        println!("k={k:?}: built in {:?}, order {:?}, norm {}", t0.elapsed(), s.op.order(), s.normalization);
        let t1 = Instant::now();
        let ok = shift_intertwine_check(&s.op, 3, &k, 6).is_ok();
        println!("  intertwines on degree <= 6: {ok} in {:?}", t1.elapsed());
    }
}
