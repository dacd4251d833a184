use std::path::Path;

use clap::{Args, Subcommand};
use tournament_core::construct::{
    attach, cyclic_game, double, lex_product, n1_interval, reduced_double, two_n0, two_n1, y2, AttachmentSpec,
    FiberAssignment,
};
use tournament_core::grouptour::dyadic::{dyadic_restriction, pjk_truncation, EpsilonWord};
use tournament_core::grouptour::triadic_tournament;
use tournament_core::profinite::{catalog, parse_tower, TOWER_CAP};
use tournament_core::{Error, Tournament};

use crate::input::{load, parse_list, parse_sets, CliError};

/// Default limit on the number of vertices of an interval generator.
pub const GEN_CAP: u64 = 4096;

#[derive(Subcommand)]
pub enum GenCommand {
    /// `2T + 1`: two copies of T and a new vertex.
    Double(InArg),
    /// `2T` without the extra vertex.
    Rdouble(InArg),
    /// Lexicographic product: base with one fiber per vertex.
    Lex {
        #[arg(long)]
        base: String,
        /// One fiber for all vertices, or one per base vertex in order.
        #[arg(long, required = true)]
        fiber: Vec<String>,
    },
    /// Attach Y to X: X keeps vertices 0..|X|, cross arcs E_i -> C_i -> F_i.
    Attach {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        /// Partition of Y, e.g. `0,1;2`.
        #[arg(long)]
        parts: String,
        /// The E side in X for each part, e.g. `0;1,2`.
        #[arg(long)]
        e_sides: String,
        /// Fail unless the surjectivity hypotheses hold.
        #[arg(long)]
        strict: bool,
    },
    /// The five-vertex tournament Y2.
    Y2,
    /// Interval of N1.
    N1(Range),
    /// First n indices of 2N0.
    #[command(name = "2n0")]
    TwoN0 {
        #[arg(long)]
        n: usize,
        /// Add the point at infinity.
        #[arg(long)]
        infinity: bool,
    },
    /// Interval of 2N1.
    #[command(name = "2n1")]
    TwoN1 {
        #[command(flatten)]
        range: Range,
        #[arg(long)]
        infinity: bool,
    },
    /// Cyclic group tournament Z/order with a game subset.
    Cyclic {
        #[arg(long)]
        order: usize,
        /// Elements of the game subset, e.g. `1,2`.
        #[arg(long)]
        game: String,
    },
    /// Triadic tournament on Z/3^depth.
    Triadic {
        #[arg(long)]
        depth: u32,
    },
    /// Dyadic tournament restricted to 0..2^depth.
    Dyadic {
        #[arg(long)]
        depth: u32,
        /// Bits eps_1 eps_2 ...; missing bits are 0.
        #[arg(long, default_value = "0")]
        epsilon: String,
    },
    /// Truncation of P[j,k] on 2^(depth+1) vertices.
    Pjk {
        #[arg(long)]
        j: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        depth: u32,
    },
    /// Top level of a lexicographic tower, e.g. `base=C3; fibers=Y2; depth=3`.
    Tower {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        depth: Option<usize>,
        /// Largest top level allowed.
        #[arg(long, default_value_t = TOWER_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
pub struct InArg {
    /// TRN file, `-`, or a catalog name (1, C3, T<n>, Y2, Z<n>[a,...]).
    #[arg(long = "in")]
    input: String,
}

#[derive(Args)]
pub struct Range {
    #[arg(long)]
    from: u64,
    #[arg(long)]
    to: u64,
    #[arg(long, default_value_t = GEN_CAP)]
    cap: u64,
}

impl Range {
    fn check(&self, per_index: u64) -> Result<(), CliError> {
        let size = self.to.saturating_sub(self.from).saturating_add(1).saturating_mul(per_index);
        if size > self.cap {
            return Err(Error::CapExceeded {
                what: "generated vertices",
                size: size.into(),
                cap: self.cap.into(),
            }
            .into());
        }
        Ok(())
    }
}

/// Files win over catalog names.
fn source(arg: &str) -> Result<Tournament, CliError> {
    let path = Path::new(arg);
    if arg == "-" || path.exists() {
        return load(path);
    }
    catalog(arg).map_err(|_| CliError::Usage(format!("{arg:?} is neither a file nor a catalog name")))
}

pub fn run(cmd: GenCommand) -> Result<Tournament, CliError> {
    Ok(match cmd {
        GenCommand::Double(a) => double(&source(&a.input)?),
        GenCommand::Rdouble(a) => reduced_double(&source(&a.input)?),
        GenCommand::Lex { base, fiber } => {
            let base = source(&base)?;
            let fibers = fiber.iter().map(|f| source(f)).collect::<Result<Vec<_>, _>>()?;
            let fa = match fibers.as_slice() {
                [one] => FiberAssignment::constant(base, one),
                _ => FiberAssignment::new(base, fibers)?,
            };
            lex_product(&fa).0
        }
        GenCommand::Attach { x, y, parts, e_sides, strict } => {
            let (x, y) = (source(&x)?, source(&y)?);
            let spec = AttachmentSpec {
                parts: parse_sets(&parts, y.order())?,
                e_sides: parse_sets(&e_sides, x.order())?,
                x,
                y,
            };
            if strict && !spec.hypotheses_hold()? {
                return Err(Error::Precondition("attachment hypotheses fail".into()).into());
            }
            attach(&spec)?
        }
        GenCommand::Y2 => y2(),
        GenCommand::N1(r) => {
            r.check(1)?;
            n1_interval(r.from, r.to)?
        }
        GenCommand::TwoN0 { n, infinity } => {
            if n as u64 * 2 > GEN_CAP {
                return Err(Error::CapExceeded {
                    what: "generated vertices",
                    size: (n as u128) * 2,
                    cap: GEN_CAP.into(),
                }
                .into());
            }
            two_n0(n, infinity)?
        }
        GenCommand::TwoN1 { range, infinity } => {
            range.check(2)?;
            two_n1(range.from, range.to, infinity)?
        }
        GenCommand::Cyclic { order, game } => cyclic_game(order, &parse_list(&game)?)?,
        GenCommand::Triadic { depth } => triadic_tournament(depth)?,
        GenCommand::Dyadic { depth, epsilon } => dyadic_restriction(depth, &EpsilonWord::parse(&epsilon)?)?,
        GenCommand::Pjk { j, k, depth } => pjk_truncation(j, k, depth)?,
        GenCommand::Tower { spec, depth, cap } => parse_tower(&spec)?.build(depth, cap)?.top().clone(),
    })
}
