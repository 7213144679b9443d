//! Scratch criterion probe used while calibrating; not part of the shipped
//! workflow.

use dbclock_core::channeling::{
    dip_statistics, symmetric_tilt_grid, transmission_scan, ChannelParams, TransmissionPoint,
    DEFAULT_N_TILTS, DEFAULT_TILT_MAX,
};

fn plateau(profile: &[TransmissionPoint<f64>]) -> (f64, f64) {
    let n = profile.len();
    let k = (n / 5).max(1);
    let pts: Vec<_> = profile[..k].iter().chain(profile[n - k..].iter()).collect();
    let mean = pts.iter().map(|p| p.fraction).sum::<f64>() / pts.len() as f64;
    let var = pts.iter().map(|p| p.stderr * p.stderr).sum::<f64>() / (pts.len() as f64).powi(2);
    (mean, var.sqrt())
}

fn criterion_row(params: &ChannelParams<f64>) -> (f64, Option<f64>) {
    let grid = symmetric_tilt_grid(DEFAULT_N_TILTS, DEFAULT_TILT_MAX).unwrap();
    let profile = transmission_scan(&grid, params).unwrap();
    let (pl, pl_err) = plateau(&profile);
    let center = &profile[profile.len() / 2];
    let z = (pl - center.fraction) / (pl_err * pl_err + center.stderr * center.stderr).sqrt();
    let stats = dip_statistics(&profile).unwrap();
    println!(
        "K={:+.3} sigma={:.3}  f(0)={:.4} plateau={:.4}  z(center)={:5.2}  depth={:.4} fwhm={} center={:+.2e} sig={}",
        params.coupling,
        params.sigma,
        center.fraction,
        pl,
        z,
        stats.depth,
        stats
            .fwhm
            .map(|w| format!("{:.3}mrad", w * 1e3))
            .unwrap_or("none".into()),
        stats.center,
        stats.significant,
    );
    (z, stats.fwhm)
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ks: Vec<f64> = if args.is_empty() {
        vec![0.03, 0.04, 0.05, 0.06, 0.07, 0.08, 0.09]
    } else {
        args.iter().map(|a| a.parse().unwrap()).collect()
    };
    let base = ChannelParams::<f64>::default();
    println!("-- K ladder, default sigma --");
    for &k in &ks {
        criterion_row(&ChannelParams { coupling: k, ..base });
    }
    println!("-- sigma sweep and K doubling per candidate --");
    for &k in &ks {
        let mut widths = Vec::new();
        for sigma in [0.125, 0.25, 0.5] {
            let (_, w) = criterion_row(&ChannelParams {
                coupling: k,
                sigma,
                ..base
            });
            widths.push(w);
        }
        let (_, w2) = criterion_row(&ChannelParams {
            coupling: 2.0 * k,
            ..base
        });
        if let (Some(a), Some(b), Some(c)) = (widths[0], widths[1], widths[2]) {
            let mean = (a + b + c) / 3.0;
            let spread = [a, b, c]
                .iter()
                .map(|w| (w - mean).abs() / mean)
                .fold(0.0f64, f64::max);
            print!("   => sigma-width spread {:.1}%", spread * 100.0);
            if let Some(w2) = w2 {
                println!(
                    ", doubling moves width {:+.1}%",
                    (w2 - b) / b * 100.0
                );
            } else {
                println!(", doubled-K width undefined");
            }
        } else {
            println!("   => some widths undefined");
        }
        println!();
    }
}
