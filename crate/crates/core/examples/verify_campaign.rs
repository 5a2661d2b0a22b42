// A verification campaign over random rational projection pairs and over
// every projection pair of 2x2 matrices mod 3, with JSON and CSV output.

use std::error::Error;

use projinv::campaign::{run_campaign, CampaignConfig, CampaignReport, RingChoice};
use projinv::TheoremId;

fn summarize(report: &CampaignReport) {
    println!("{} ({:?}, {} pairs):", report.config.ring, report.mode, report.pairs);
    for (id, a) in &report.aggregates {
        println!("  {id:<9} passed {:>4}  failed {:>2}  not applicable {:>4}", a.passed, a.failed, a.not_applicable);
    }
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let random = CampaignConfig { n: 3, trials: 20, seed: 7, ..CampaignConfig::default() };
    let report = run_campaign(&random)?;
    summarize(&report);
    assert_eq!(CampaignReport::from_json(&report.to_json())?, report);

    let exhaustive = CampaignConfig {
        ring: "gf:3".parse::<RingChoice>()?,
        n: 2,
        theorems: TheoremId::parse_list("thm24,cor25,thm213,thm214")?,
        ..CampaignConfig::default()
    };
    let report = run_campaign(&exhaustive)?;
    summarize(&report);
    println!("first CSV rows:");
    for line in report.to_csv()?.lines().take(4) {
        println!("  {line}");
    }
    println!("exit code would be {}", report.exit_code());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
