/// `VERDICT pass|fail t=<t> lambda_min=<n> witnesses=<n> ms=<n>`.
pub fn verdict_line(pass: bool, t: usize, lambda_min: u64, witnesses: usize, ms: u128) -> String {
    format!(
        "VERDICT {} t={t} lambda_min={lambda_min} witnesses={witnesses} ms={ms}",
        if pass { "pass" } else { "fail" }
    )
}
