"""
Command-line handler: one cmd_* method per subcommand
"""
import argparse
from typing import Optional, Sequence

from config.config import (
    DEFAULT_CERTIFY_MAX_LEN,
    FUZZ_DEFAULT_COUNT,
    FUZZ_DEFAULT_SEED,
)
from database.sigma_repository import FORMATS, SigmaRepository, SigmaSpec
from services import analysis, bfs_oracle, branching, mealy, paper_suite
from services.catalog import builtin_names
from services.words import Word, format_word, parse_word
from utils.console import set_quiet, status
from utils.errors import CuntzError, ExitCode, exit_code_for


class CommandHandler:
    """Parses argv and dispatches to the subcommand handlers"""

    def __init__(self, repository: Optional[SigmaRepository] = None):
        """
        Initialize command handler

        Args:
            repository: σ file repository (a fresh one by default)
        """
        self.repository = repository or SigmaRepository()
        self.parser = argparse.ArgumentParser(
            prog="cuntz-branching",
            description="Branching laws of permutative endomorphisms of Cuntz algebras",
        )
        self._register_commands()

    # ==================== Registration ====================
    def _register_commands(self):
        """Register all subcommands"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--unicode", action="store_true", help="use ∘ ψ ⊕ glyphs")
        common.add_argument("--quiet", action="store_true", help="no status lines on stderr")

        sigma_options = argparse.ArgumentParser(add_help=False)
        self._add_sigma_arguments(sigma_options)

        commands = self.parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

        machine = commands.add_parser("machine", parents=[common, sigma_options], help="semi-Mealy machine of σ")
        view = machine.add_mutually_exclusive_group()
        view.add_argument("--dot", action="store_true", help="Graphviz DOT diagram")
        view.add_argument("--table", action="store_true", help="TSV transition table (default)")
        machine.set_defaults(handler=self.cmd_machine)

        branch = commands.add_parser("branch", parents=[common, sigma_options], help="branching law of P(W)")
        branch.add_argument("--word", action="append", required=True, help="input word; repeat for a table")
        branch.add_argument("--show-cycles", action="store_true", help="print the state cycle of each summand")
        branch.add_argument("--table", action="store_true", help="input | cycles | outputs | law table")
        branch.add_argument("--markdown", action="store_true", help="markdown instead of TSV for --table")
        branch.set_defaults(handler=self.cmd_branch)

        check = commands.add_parser("check", parents=[common], help="compare against the brute-force oracle")
        self._add_sigma_arguments(check, required=False)
        target = check.add_mutually_exclusive_group()
        target.add_argument("--word", help="nonperiodic input word")
        target.add_argument(
            "--fuzz", type=int, nargs="?", const=FUZZ_DEFAULT_COUNT, metavar="COUNT",
            help=f"random (σ, J) instances (default {FUZZ_DEFAULT_COUNT})"
        )
        check.add_argument("--seed", type=int, default=FUZZ_DEFAULT_SEED)
        check.set_defaults(handler=self.cmd_check)

        formula = commands.add_parser("formula", parents=[common, sigma_options], help="ψ_σ on the generators")
        formula.set_defaults(handler=self.cmd_formula)

        signature = commands.add_parser("signature", parents=[common, sigma_options], help="branching signature")
        signature.add_argument("--max-len", type=int, required=True)
        signature.set_defaults(handler=self.cmd_signature)

        classify = commands.add_parser("classify", parents=[common], help="partition 𝔖_{N,l} by signature")
        classify.add_argument("--n", type=int, required=True)
        classify.add_argument("--l", type=int, required=True)
        classify.add_argument("--max-len", type=int, required=True)
        classify.add_argument("--cap", type=int, help="stop after this many permutations")
        classify.add_argument("--force", action="store_true", help="lift the enumeration guard")
        classify.set_defaults(handler=self.cmd_classify)

        suite = commands.add_parser("paper-suite", parents=[common], help="recompute every published law")
        suite.set_defaults(handler=self.cmd_paper_suite)

        certify = commands.add_parser("certify", parents=[common, sigma_options], help="properness / irreducibility")
        certify.add_argument("--max-len", type=int, default=DEFAULT_CERTIFY_MAX_LEN)
        certify.set_defaults(handler=self.cmd_certify)

        distinguish = commands.add_parser("distinguish", parents=[common, sigma_options], help="find a word separating two σ's")
        distinguish.add_argument("--other", metavar="FILE", help="second σ file")
        distinguish.add_argument("--other-builtin", metavar="NAME", help="second σ by name")
        distinguish.add_argument("--max-len", type=int, default=DEFAULT_CERTIFY_MAX_LEN)
        distinguish.set_defaults(handler=self.cmd_distinguish)

        parity = commands.add_parser("parity", parents=[common], help="ψ_12 parity law")
        parity.add_argument("--max-len", type=int, default=8)
        parity.set_defaults(handler=self.cmd_parity)

    @staticmethod
    def _add_sigma_arguments(parser: argparse.ArgumentParser, required: bool = True):
        source = parser.add_mutually_exclusive_group(required=required)
        source.add_argument("--sigma", metavar="FILE", help="σ file (JSON or compact)")
        source.add_argument("--builtin", metavar="NAME", help=f"named σ: {', '.join(builtin_names())}")
        parser.add_argument("--format", choices=FORMATS, default="auto", help="σ file format")

    # ==================== Dispatch ====================
    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Run one command

        Returns:
            Process exit code
        """
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            # argparse exits 0 after --help and 2 on usage errors
            return ExitCode.OK if not e.code else ExitCode.PARSE

        set_quiet(args.quiet)
        try:
            return args.handler(args)
        except CuntzError as e:
            status(f"❌ {e}")
            return exit_code_for(e)

    def _load(self, args: argparse.Namespace) -> SigmaSpec:
        return self.repository.resolve(args.sigma, args.builtin, args.format)

    @staticmethod
    def _word(text: str, spec: SigmaSpec) -> Word:
        return parse_word(text, spec.parsed.alphabet_size)

    # ==================== Commands ====================
    def cmd_machine(self, args: argparse.Namespace) -> int:
        """Print the machine as DOT or TSV"""
        spec = self._load(args)
        machine = mealy.build(spec.parsed)
        print(mealy.to_dot(machine) if args.dot else mealy.to_table(machine), end="")
        return ExitCode.OK

    def cmd_branch(self, args: argparse.Namespace) -> int:
        """Print P(W) o psi = ..."""
        spec = self._load(args)
        words = [self._word(text, spec) for text in args.word]

        service = branching.BranchingService(spec.parsed)
        if args.table:
            fmt = "markdown" if args.markdown else "tsv"
            print(service.table(words, fmt=fmt, unicode=args.unicode), end="")
            return ExitCode.OK

        for word in words:
            law = service.branch(word)
            print(branching.render_law(law, args.unicode))
            if law.gauge_reduced:
                print(f"gauge-reduced (r={law.gauge_period}): {format_word(law.query)} = ({format_word(law.input)})^{law.gauge_period} up to rotation")
            if args.show_cycles:
                for component in law.components:
                    states = " ".join(mealy.state_name(service.machine, q) for q in component.states)
                    print(f"  cycle {states} -> {format_word(component.raw_output)}")
        return ExitCode.OK

    def cmd_check(self, args: argparse.Namespace) -> int:
        """Compare machine and oracle on one word or on a seeded random sweep"""
        if args.fuzz is None and args.word is None:
            status("❌ check needs --word W or --fuzz COUNT")
            return ExitCode.PARSE

        spec = None
        if args.sigma is not None or args.builtin is not None:
            spec = self._load(args)

        if args.fuzz is not None:
            if args.fuzz < 0:
                status("❌ --fuzz must not be negative")
                return ExitCode.PARSE
            failures = bfs_oracle.fuzz(args.fuzz, args.seed, spec.parsed if spec else None)
            for sigma, comparison in failures:
                self._print_diff(comparison, sigma.table)
            if failures:
                return ExitCode.MISMATCH
            print(f"OK {args.fuzz} instances (seed {args.seed})")
            return ExitCode.OK

        if spec is None:
            status("❌ check --word needs --sigma FILE or --builtin NAME")
            return ExitCode.PARSE
        comparison = bfs_oracle.cross_check(spec.parsed, self._word(args.word, spec))
        if comparison.agrees:
            print("OK")
            return ExitCode.OK
        self._print_diff(comparison, spec.parsed.table)
        return ExitCode.MISMATCH

    @staticmethod
    def _print_diff(comparison: bfs_oracle.OracleComparison, table: tuple[int, ...]):
        print(f"MISMATCH word={format_word(comparison.word)} table={','.join(map(str, table))}")
        print(f"  machine: {' '.join(format_word(w) for w in comparison.machine_outputs)}")
        print(f"  oracle:  {' '.join(format_word(w) for w in comparison.oracle_outputs)}")

    def cmd_formula(self, args: argparse.Namespace) -> int:
        """One line per generator"""
        spec = self._load(args)
        for line in branching.endomorphism_formula(spec.parsed, args.unicode):
            print(line)
        return ExitCode.OK

    def cmd_signature(self, args: argparse.Namespace) -> int:
        """TSV of the signature up to --max-len"""
        if args.max_len < 1:
            status(f"❌ --max-len must be at least 1, got {args.max_len}")
            return ExitCode.PARSE
        spec = self._load(args)
        print(branching.signature_table(spec.parsed, args.max_len), end="")
        return ExitCode.OK

    def cmd_classify(self, args: argparse.Namespace) -> int:
        """TSV classification report"""
        if args.max_len < 1 or args.n < 2 or args.l < 1:
            status("❌ classify needs --n ≥ 2, --l ≥ 1 and --max-len ≥ 1")
            return ExitCode.PARSE
        result = analysis.classify(args.n, args.l, args.max_len, cap=args.cap, allow_large=args.force)
        print(result.report(), end="")
        return ExitCode.OK

    def cmd_paper_suite(self, args: argparse.Namespace) -> int:
        """Exit 0 iff every published row is reproduced"""
        results = paper_suite.run_paper_suite()
        print(paper_suite.suite_report(results), end="")
        return ExitCode.OK if all(result.passed for result in results) else ExitCode.MISMATCH

    def cmd_certify(self, args: argparse.Namespace) -> int:
        """Properness certificate and irreducibility evidence"""
        if args.max_len < 1:
            status(f"❌ --max-len must be at least 1, got {args.max_len}")
            return ExitCode.PARSE
        spec = self._load(args)

        proper = analysis.properness_certificate(spec.parsed, args.max_len)
        if proper:
            print(f"proper (certified): witness {format_word(proper.witness)}: {branching.render_law(proper.laws[0], args.unicode)}")
        else:
            print(f"proper: no certificate up to {args.max_len}")

        evidence = analysis.irreducibility_evidence(spec.parsed, args.max_len)
        if evidence:
            print(f"irreducible (certified): witness {format_word(evidence.witness)}: {branching.render_law(evidence.laws[0], args.unicode)}")
        else:
            print(f"irreducible: no certificate up to {args.max_len}")
        return ExitCode.OK

    def cmd_distinguish(self, args: argparse.Namespace) -> int:
        """First word whose branching laws differ"""
        if args.max_len < 1:
            status(f"❌ --max-len must be at least 1, got {args.max_len}")
            return ExitCode.PARSE
        first = self._load(args)
        second = self.repository.resolve(args.other, args.other_builtin, args.format)

        certificate = analysis.distinguish(first.parsed, second.parsed, args.max_len)
        if certificate is None:
            print(f"no difference up to {args.max_len} (inconclusive)")
            return ExitCode.OK
        law1, law2 = certificate.laws
        print(f"distinct: witness {format_word(certificate.witness)}")
        print(f"  {first.source}: {branching.render_law(law1, args.unicode)}")
        print(f"  {second.source}: {branching.render_law(law2, args.unicode)}")
        return ExitCode.OK

    def cmd_parity(self, args: argparse.Namespace) -> int:
        """Check M = 2 for even n_1(J), M = 1 for odd, under ψ_12"""
        if args.max_len < 1:
            status(f"❌ --max-len must be at least 1, got {args.max_len}")
            return ExitCode.PARSE
        failures = analysis.parity_counterexamples(args.max_len)
        if not failures:
            print(f"OK parity law holds up to length {args.max_len}")
            return ExitCode.OK
        print("word\texpected\tactual")
        for word, expected, actual in failures:
            print(f"{format_word(word)}\t{expected}\t{actual}")
        return ExitCode.MISMATCH
