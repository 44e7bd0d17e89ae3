use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use multicat::bounds::SizeProfile;
use multicat::cli::{
    self, cmd_bound, cmd_grid, cmd_poly, cmd_witness, parse_methods, parse_poly_choices, CliError,
    GridSpec,
};
use multicat::report::CountReport;
use multicat::witness::FamilyKind;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "multicat",
    version,
    about = "Exact state complexity of chained DFA catenation",
    long_about = "Builds catenation chains of complete DFAs, measures the exact minimal-DFA \
                  size, computes the matching upper bound by independent methods, and checks \
                  that the witness families attain it.\n\n\
                  Sizes are given as a comma list (e.g. --sizes 3,4,3), every size at least 2. \
                  Families: table1 (alpha+1 letters), table2 (alpha letters), two_letter, \
                  three_letter. Witness letters are indices 0..k-1; for table1 the slot s \
                  of the family definition is letter s-1, for table2 it is letter alpha-s, \
                  and for two_letter/three_letter the letters a, b, c are 0, 1, 2."
)]
struct Cli {
    /// Report format for bound/verify/grid output
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the state bound for a size profile
    Bound {
        /// Component sizes, e.g. 3,3,4
        #[arg(long)]
        sizes: String,
        /// Comma list of brute, recurrence, formula; or all
        #[arg(long, default_value = "all")]
        methods: String,
    },
    /// Write a witness family to automaton files
    Witness {
        /// table1, table2, two_letter or three_letter
        #[arg(long)]
        family: String,
        #[arg(long)]
        sizes: String,
        /// Output directory for a1.txt..aN.txt and manifest.txt
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Build, chain, determinize and minimize a family, then compare the
    /// measured size with the bound
    Verify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        sizes: String,
        /// Cap on the total fused state count
        #[arg(long, default_value_t = cli::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Verify a whole grid of profiles
    Grid {
        #[arg(long)]
        family: String,
        /// Inclusive chain-length range, e.g. 2..4 or 3
        #[arg(long)]
        alpha: String,
        /// Inclusive size range applied to every component, e.g. 2..4
        #[arg(long)]
        sizes: String,
        #[arg(long, default_value_t = cli::DEFAULT_BUDGET)]
        budget: usize,
        /// Exit with code 3 when any profile misses the bound
        #[arg(long)]
        strict: bool,
    },
    /// Print the bound polynomials
    Poly {
        /// Chain length
        #[arg(long)]
        alpha: usize,
        /// Comma list of s_minus, s_plus, r, r_expanded, m
        #[arg(long, default_value = "r")]
        which: String,
    },
}

fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let parse = |tok: &str| {
        tok.trim()
            .parse::<usize>()
            .map_err(|_| cli::usage(format!("invalid range bound `{tok}`")))
    };
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo = parse(lo)?;
            let hi = parse(hi)?;
            if lo > hi {
                return Err(cli::usage(format!("empty range `{text}`")));
            }
            Ok((lo, hi))
        }
        None => {
            let v = parse(text)?;
            Ok((v, v))
        }
    }
}

fn parse_profile(text: &str) -> Result<SizeProfile, CliError> {
    text.parse::<SizeProfile>().map_err(CliError::Usage)
}

fn parse_family(text: &str) -> Result<FamilyKind, CliError> {
    text.parse::<FamilyKind>()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn print_reports(reports: &[CountReport], format: Format) {
    match format {
        Format::Human => {
            println!("{}", CountReport::HUMAN_HEADER);
            for report in reports {
                println!("{}", report.human_row());
            }
        }
        Format::Json => {
            for report in reports {
                println!("{}", report.to_json());
            }
        }
        Format::Csv => {
            println!("{}", CountReport::CSV_HEADER);
            for report in reports {
                println!("{}", report.csv_row());
            }
        }
    }
}

fn run(args: Cli) -> Result<u8, CliError> {
    match args.command {
        Command::Bound { sizes, methods } => {
            let profile = parse_profile(&sizes)?;
            let methods = parse_methods(&methods)?;
            let report = cmd_bound(&profile, &methods)?;
            print_reports(std::slice::from_ref(&report), args.format);
            Ok(0)
        }
        Command::Witness { family, sizes, out } => {
            let kind = parse_family(&family)?;
            let profile = parse_profile(&sizes)?;
            let written = cmd_witness(kind, &profile, &out)?;
            for path in written {
                println!("{}", path.display());
            }
            Ok(0)
        }
        Command::Verify {
            family,
            sizes,
            budget,
        } => {
            let kind = parse_family(&family)?;
            let profile = parse_profile(&sizes)?;
            let report = cli::cmd_verify(kind, &profile, budget)?;
            print_reports(std::slice::from_ref(&report), args.format);
            Ok(0)
        }
        Command::Grid {
            family,
            alpha,
            sizes,
            budget,
            strict,
        } => {
            let kind = parse_family(&family)?;
            let (alpha_min, alpha_max) = parse_range(&alpha)?;
            let (size_min, size_max) = parse_range(&sizes)?;
            let spec = GridSpec {
                family: kind,
                alpha_min,
                alpha_max,
                size_min,
                size_max,
                budget,
            };
            let (reports, summary) = cmd_grid(&spec)?;
            print_reports(&reports, args.format);
            match args.format {
                Format::Human => println!("{}", summary.human_line()),
                Format::Json => println!("{}", serde_json::json!({ "summary": summary })),
                Format::Csv => println!(
                    "# attained={} missed={} skipped={}",
                    summary.attained, summary.missed, summary.skipped
                ),
            }
            if strict && summary.missed > 0 {
                return Ok(3);
            }
            Ok(0)
        }
        Command::Poly { alpha, which } => {
            let choices = parse_poly_choices(&which)?;
            for line in cmd_poly(alpha, &choices)? {
                match line.label {
                    Some(label) => println!("{label} = {}", line.text),
                    None => println!("{}", line.text),
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Inconsistency(message)) => {
            eprintln!("error: internal inconsistency: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
