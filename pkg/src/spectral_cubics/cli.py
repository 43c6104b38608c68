"""Command-line interface 命令行界面

CLI for spectral-cubics using Typer
使用 Typer 的 spectral-cubics 命令行界面

Global flags go before the command: spectral-cubics --json spectral cubic.json
全局参数放在命令之前

Exit codes 退出码:
  0  pass
  2  input error
  3  computation failure
  4  atlas violation
"""

import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Iterator, Optional, TypeVar

import typer
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from .atlas import atlas_document, dump_atlas, graph_properties_check
from .errors import (
    EXIT_ATLAS,
    EXIT_COMPUTATION,
    AtlasViolation,
    InputError,
    SpectralCubicsError,
    StageError,
    error_payload,
)
from .gf2 import dump_model, standard_model, verify_suite
from .models.config import AnalysisSettings
from .models.documents import CubicDocument, CurveDocument, SurfaceDocument, parse_rational
from .pipeline import (
    EXAMPLES,
    analyze_document,
    build_example,
    corpus_exit_code,
    document_from_body,
    load_document,
    require_pass,
    run_corpus,
    run_id_for,
    section_count,
    surface_report,
)
from .threefold import from_document
from .utils import ui
from .utils.config import get_config_path, load_file_settings, load_settings, save_settings
from .utils.error_log import record_error
from .utils.logger import logger

# ─── Create Typer app ───
app = typer.Typer(
    name="spectral-cubics",
    help="Spectral quintics and theta-conics of real cubic threefolds with a marked line",
    add_completion=False,
    invoke_without_command=True,
    context_settings={"help_option_names": ["-h", "--help"]},
)
gf2_app = typer.Typer(help="GF(2) theta-characteristic models GF(2) theta 特征模型")
config_app = typer.Typer(help="Show or change analysis settings 查看或修改分析设置")
app.add_typer(gf2_app, name="gf2")
app.add_typer(config_app, name="config")

T = TypeVar("T", bound=BaseModel)


@dataclass
class CliOptions:
    """Global flags 全局参数"""

    json_output: bool = False
    overrides: dict[str, Any] = field(default_factory=dict)

    def settings(self, **extra: Any) -> AnalysisSettings:
        return load_settings({**self.overrides, **extra})


def _options(ctx: typer.Context) -> CliOptions:
    obj = ctx.find_root().obj
    return obj if isinstance(obj, CliOptions) else CliOptions()


@contextmanager
def _guard(opts: CliOptions, source: Optional[str] = None) -> Iterator[None]:
    """Map failures to structured errors and exit codes 将失败映射为结构化错误与退出码"""
    try:
        yield
    except typer.Exit:
        raise
    except PydanticValidationError as e:
        _fail(opts, InputError(str(e.errors()[0]["msg"])), source)
    except Exception as e:
        _fail(opts, e, source)


def _fail(opts: CliOptions, error: Exception, source: Optional[str]) -> None:
    stage = error.stage if isinstance(error, StageError) else None
    payload = error_payload(error, stage)
    cause = error.cause if isinstance(error, StageError) else error
    if not isinstance(cause, SpectralCubicsError):
        logger.error("Unexpected failure", cause)
    record_error(cause, "cli", stage, source)
    if opts.json_output:
        typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        body = payload["error"]
        where = f" in {body['stage']}" if "stage" in body else ""
        ui.error(f"{body['type']}{where}", cause)
        for key, value in body.get("details", {}).items():
            ui.hint(f"{key}: {value}")
    raise typer.Exit(payload["status"])


def _emit(opts: CliOptions, model: T, render: Callable[[T], None]) -> None:
    if opts.json_output:
        typer.echo(model.model_dump_json(indent=2))
    else:
        render(model)


def _parse_params(pairs: list[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError(f"parameter {pair!r} is not of the form key=value")
        params[key.strip()] = value.strip()
    return params


def _parse_plane_line(text: str) -> list[Fraction]:
    try:
        coeffs = [parse_rational(c.strip()) for c in text.split(",")]
    except ValueError as e:
        raise InputError(str(e), line=text) from e
    if len(coeffs) != 3:
        raise InputError("--line needs three coefficients a,b,c", line=text)
    return coeffs


# ═══════════════════════════════════════════════════════════
#  Global flags
# ═══════════════════════════════════════════════════════════


@app.callback()
def main(
    ctx: typer.Context,
    json_output: bool = typer.Option(False, "--json", help="Print JSON instead of tables"),
    chart: Optional[int] = typer.Option(None, "--chart", help="Use this shear only"),
    precision: Optional[int] = typer.Option(
        None, "--precision", help="Bisection budget for root refinement"
    ),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for fuzz suites"),
    verbose: bool = typer.Option(False, "-v", "--verbose", help="Debug logging on stderr"),
) -> None:
    """Spectral correspondence for real cubic threefolds 实三次三维簇的谱对应"""
    if verbose:
        logger.set_level("DEBUG")
    overrides: dict[str, Any] = {
        "shear_schedule": [chart] if chart is not None else None,
        "refine_budget": precision,
        "seed": seed,
    }
    ctx.obj = CliOptions(json_output=json_output, overrides=overrides)
    if ctx.invoked_subcommand is None:
        ui.banner()
        ui.hint("Commands: spectral, examples, section, gf2, atlas, topology, surface, corpus")


# ═══════════════════════════════════════════════════════════
#  Analysis commands
# ═══════════════════════════════════════════════════════════


@app.command("spectral")
def spectral(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Cubic or curve document (JSON)"),
) -> None:
    """Run the full analysis chain on a document 对文档运行完整分析链"""
    opts = _options(ctx)
    source = str(file)
    with _guard(opts, source):
        doc = load_document(file)
        if isinstance(doc, SurfaceDocument):
            raise InputError("surface documents go to the surface command")
        report = analyze_document(doc, opts.settings(), source=source)
    _emit(opts, report, ui.analysis_report)
    try:
        require_pass(report)
    except AtlasViolation as e:
        ui.error("Atlas violation", e)
        raise typer.Exit(e.exit_code)


@app.command("examples")
def examples(
    ctx: typer.Context,
    name: str = typer.Argument(..., help=f"One of: {', '.join(EXAMPLES)}"),
    param: list[str] = typer.Option([], "--param", "-p", help="Family parameter key=value"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the document here"),
    analyze: bool = typer.Option(False, "--analyze", help="Analyze the document right away"),
) -> None:
    """Emit a ready-to-analyze example document 输出可直接分析的示例文档"""
    opts = _options(ctx)
    with _guard(opts, name):
        doc = build_example(name, _parse_params(param), opts.settings())
        text = doc.model_dump_json(indent=2)
        if out is not None:
            out.write_text(text + "\n", encoding="utf-8")
        report = analyze_document(doc, opts.settings(), source=name) if analyze else None

    if report is None:
        if out is None:
            typer.echo(text)
        else:
            ui.success(f"Wrote {name} to {out}")
        return
    _emit(opts, report, ui.analysis_report)
    try:
        require_pass(report)
    except AtlasViolation as e:
        ui.error("Atlas violation", e)
        raise typer.Exit(e.exit_code)


@app.command("section")
def section(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Cubic threefold document (JSON)"),
    line: str = typer.Option(..., "--line", "-l", help="Plane line m as a,b,c"),
) -> None:
    """Count real lines on the hyperplane section over m 统计 m 上超平面截面的实直线"""
    opts = _options(ctx)
    with _guard(opts, str(file)):
        doc = load_document(file, "cubic")
        assert isinstance(doc, CubicDocument)
        report = section_count(
            from_document(doc), _parse_plane_line(line), opts.settings(), run_id_for(doc)
        )
    _emit(opts, report, ui.section_report)
    if not report.agrees:
        ui.error(f"Section has {report.counted} real lines, {report.predicted} predicted")
        raise typer.Exit(EXIT_COMPUTATION)


@app.command("topology")
def topology_cmd(
    ctx: typer.Context,
    file: Optional[Path] = typer.Argument(None, help="Curve document (JSON)"),
    poly: Optional[str] = typer.Option(None, "--poly", help="Curve in x, y, z"),
) -> None:
    """Rigid isotopy class and oval tree of a plane curve 平面曲线的刚性同痕类与卵形线树"""
    opts = _options(ctx)
    source = str(file) if file is not None else "--poly"
    with _guard(opts, source):
        if (file is None) == (poly is None):
            raise InputError("give either a curve document or --poly")
        if poly is not None:
            doc = document_from_body({"curve": poly}, "curve")
        else:
            doc = load_document(file, "curve")  # type: ignore[arg-type]
        assert isinstance(doc, CurveDocument)
        report = analyze_document(doc.model_copy(update={"conic": None}), opts.settings(), source)
        assert report.topology is not None
    _emit(opts, report.topology, ui.topology_block)


@app.command("surface")
def surface(
    ctx: typer.Context,
    file: Path = typer.Argument(..., help="Marked cubic surface document (JSON)"),
) -> None:
    """Spectrum, line type and line codes of a marked cubic surface 标记三次曲面的谱与直线码"""
    opts = _options(ctx)
    with _guard(opts, str(file)):
        doc = load_document(file, "surface")
        assert isinstance(doc, SurfaceDocument)
        report = surface_report(doc, source=str(file))
    _emit(opts, report, ui.surface_report)


@app.command("corpus")
def corpus(
    ctx: typer.Context,
    directory: Path = typer.Argument(..., help="Directory of JSON documents"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
) -> None:
    """Analyze every document of a directory 分析目录中的每个文档

    Exits 3 when any document failed to compute, else 4 on a violation, else 2 on an input error.
    任一文档计算失败时退出码为 3，否则违规为 4，否则输入错误为 2。
    """
    opts = _options(ctx)
    with _guard(opts, str(directory)):
        if not directory.is_dir():
            raise InputError(f"{directory} is not a directory")
        entries = run_corpus(directory, opts.settings(workers=workers))

    if opts.json_output:
        typer.echo(json.dumps([e.model_dump(mode="json") for e in entries], indent=2))
    else:
        ui.corpus_table(entries)
    status = corpus_exit_code(entries)
    if status:
        raise typer.Exit(status)


# ═══════════════════════════════════════════════════════════
#  Tables and suites
# ═══════════════════════════════════════════════════════════


@app.command("atlas")
def atlas(
    ctx: typer.Context,
    check: bool = typer.Option(False, "--check", help="Check the atlas graph properties"),
) -> None:
    """Dump the deformation atlas with citations 输出带引用的形变图集"""
    opts = _options(ctx)
    if check:
        with _guard(opts, "atlas"):
            report = graph_properties_check()
        _emit(opts, report, ui.atlas_check)
        if not report.passed:
            raise typer.Exit(EXIT_ATLAS)
        return
    if opts.json_output:
        typer.echo(dump_atlas(), nl=False)
    else:
        ui.atlas_tables(atlas_document())


@gf2_app.command("verify")
def gf2_verify(
    ctx: typer.Context,
    model: list[str] = typer.Option([], "--model", "-m", help="Quintic class, repeatable"),
    fuzz: Optional[int] = typer.Option(None, "--fuzz", help="Random conjugates to test"),
) -> None:
    """Run the exhaustive property suite 运行完整性质套件"""
    opts = _options(ctx)
    with _guard(opts, "gf2"):
        settings = opts.settings()
        report = verify_suite(
            model or None,
            fuzz=settings.fuzz_cases if fuzz is None else fuzz,
            seed=settings.seed,
        )
    _emit(opts, report, ui.gf2_matrix)
    if not report.passed:
        raise typer.Exit(EXIT_COMPUTATION)


@gf2_app.command("model")
def gf2_model(
    ctx: typer.Context,
    code: str = typer.Argument(..., help="Quintic class code"),
) -> None:
    """Print the hex-packed standard model of a class 输出某类的十六进制标准模型"""
    opts = _options(ctx)
    with _guard(opts, "gf2"):
        dump = dump_model(standard_model(code))
    typer.echo(json.dumps(dump, indent=2, ensure_ascii=False))


# ═══════════════════════════════════════════════════════════
#  Settings
# ═══════════════════════════════════════════════════════════


@config_app.command("show")
def config_show(ctx: typer.Context) -> None:
    """Show the effective settings 显示生效的设置"""
    opts = _options(ctx)
    with _guard(opts, "config"):
        settings = opts.settings()
    if opts.json_output:
        typer.echo(settings.model_dump_json(indent=2))
        return
    ui.header("Settings")
    ui.table([(k, json.dumps(v)) for k, v in settings.model_dump().items()])
    ui.hint(str(get_config_path()))


@config_app.command("set")
def config_set(
    ctx: typer.Context,
    key: str = typer.Argument(..., help="Setting name"),
    value: str = typer.Argument(..., help="New value, JSON or plain text"),
) -> None:
    """Store one setting in the config file 在配置文件中保存一项设置"""
    opts = _options(ctx)
    with _guard(opts, "config"):
        if key not in AnalysisSettings.model_fields:
            raise InputError(
                f"unknown setting {key}", known=",".join(AnalysisSettings.model_fields)
            )
        try:
            parsed: Any = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        settings = AnalysisSettings(**{**load_file_settings(), key: parsed})
        path = save_settings(settings)
    ui.success(f"Saved {key} to {path}")


# ═══════════════════════════════════════════════════════════
#  Entry point
# ═══════════════════════════════════════════════════════════


def cli_main() -> None:
    """Entry point for CLI"""
    try:
        app()
    except KeyboardInterrupt:
        print()
        ui.info("Cancelled")
        raise typer.Exit(1)
    except Exception as e:
        ui.error("Unexpected error", e)
        raise typer.Exit(EXIT_COMPUTATION)


if __name__ == "__main__":
    cli_main()
