//! Hirota, Toda and KP identities checked coefficient by coefficient.

use taukit::rspec::RSpec;
use taukit::scalar::rat;
use taukit::tau::q_rspec_from_values;
use taukit::verify::{check_hirota, check_kp_bilinear, check_toda, Gauge};

fn main() -> taukit::Result<()> {
    let specs = [
        RSpec::rational(&[rat(1, 2)], &[rat(1, 3)]),
        RSpec::rational(&[rat(2, 3), rat(-5, 4)], &[]),
        q_rspec_from_values(&[rat(3, 4)], &[rat(2, 5)], &rat(1, 2))?,
    ];
    for r in &specs {
        println!("{}", r.to_json());
        for m in -1..=1 {
            let h = check_hirota(r, m, 5)?;
            let t = check_toda(r, m, 4, Gauge::Generalized)?;
            let s = check_toda(r, m, 4, Gauge::Standard)?;
            println!("  M={m:>2}  hirota {} (grade {})  toda {}  standard {}", h.pass, h.grade, t.pass, s.pass);
        }
        println!("  kp {}", check_kp_bilinear(r, 0, 4)?.pass);
    }

    // r(D) = D vanishes at 0, so only the generalized form applies
    let d = RSpec::rational(&[rat(0, 1)], &[]);
    println!(
        "\nr = D: toda {}, standard -> {:?}",
        check_toda(&d, 0, 4, Gauge::Generalized)?.pass,
        check_toda(&d, 0, 4, Gauge::Standard).err()
    );
    println!("{}", check_hirota(&d, 1, 3)?.to_json());
    Ok(())
}
