use cherednik::exact::multipoly::MultiPoly;
use cherednik::exact::gcd::poly_gcd;
use cherednik::exact::scalar::int;
use std::time::Instant;

fn lin(nv: usize, i: usize, j: usize) -> MultiPoly {
    &MultiPoly::var(nv, i) - &MultiPoly::var(nv, j)
}

fn main() {
    let nv = 6;
    // denominators like (x1-x2)^2 (x1-x3)^2 (x2-x3)^2
    let d1 = &(&lin(nv,0,1).pow(2) * &lin(nv,0,2).pow(2)) * &lin(nv,1,2).pow(2);
    let d2 = &(&lin(nv,0,1).pow(2) * &lin(nv,0,2).pow(1)) * &lin(nv,1,2).pow(1);
    let t0 = Instant::now();
    let g = poly_gcd(&d1, &d2);
    println!("gcd terms: {} in {:?}", g.num_terms(), t0.elapsed());
    // now a num/den style pair
    let num = {
        let mut p = MultiPoly::zero(nv);
        p.add_term(vec![0,0,0,2,0,0], int(1));
        p.add_term(vec![1,1,0,0,0,0], int(3));
        &(&p * &lin(nv,0,1)) * &lin(nv,1,2).pow(2)
    };
    let t1 = Instant::now();
    let g2 = poly_gcd(&num, &d1);
    println!("gcd2 terms: {} in {:?}", g2.num_terms(), t1.elapsed());
}
