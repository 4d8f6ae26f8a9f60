//! kS3 = ⊕ Φ_P(H*_V) for P in the S3 family.

use peterweyl::groups::make_group;
use peterweyl::phi::{s3_family, PhiContext};
use peterweyl::Scalar;

fn main() {
    let g = make_group(&"S3".parse().unwrap()).unwrap();
    let ctx = PhiContext::new(&g).unwrap();
    let p = s3_family(&g, &Scalar::one(), &Scalar::one()).unwrap().p;
    let d = ctx.mock_pw_decomposition(&p).unwrap();
    for b in &d.blocks {
        let ad = b.ad_type.as_ref().map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        println!("{:<5} dim {}  ad-stable {}  ad-type {} (expected {})", b.label, b.dim, b.ad_stable, ad, b.expected_type);
    }
    println!("direct {}  central elements span Z(kS3): {}", d.direct, d.central_spans_center);
}
