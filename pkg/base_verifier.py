"""
Base Verifier Module

This module provides a base class for the verifiers of this package: the
protocol transcriptions, the Rel search, the lemma suite and the Born rule
reports. It implements the shared functionality for running named checks
independently and emitting reports as text or JSON, while leaving report
generation to the concrete verifiers.

Classes:
    BaseVerifier: Abstract base class for report-producing verifiers
"""

import json
import logging
from typing import Callable, Dict, Optional

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


class BaseVerifier:
    """
    Abstract base class for verifiers.

    This class provides the foundation for every verification run. It
    implements the common functionality for evaluating named checks and
    emitting reports while defining the interface concrete verifiers must
    implement.

    Attributes:
        name (str): The name of the verification being run
        report (Optional[Dict]): The latest generated report
    """

    def __init__(self, name: str):
        """
        Initialize the BaseVerifier.

        Args:
            name (str): The name of the verification, used in reports and logs
        """
        self.name = name
        self.report = None

    def checks(self) -> Dict[str, Callable[[], Dict]]:
        """
        Named checks evaluated by run_all_checks.

        Returns:
            Dict[str, Callable[[], Dict]]: Check name to a callable returning a
                result dictionary carrying at least an ``ok`` flag
        """
        return {}

    def run_all_checks(self) -> Dict[str, Dict]:
        """
        Evaluate every named check independently.

        A check that raises is recorded as failed with the error message and
        the remaining checks still run.

        Returns:
            Dict[str, Dict]: Check name to its result dictionary
        """
        results = {}
        for check_name, check in self.checks().items():
            try:
                results[check_name] = check()
            except Exception as e:
                logger.warning("%s: check %s raised %s", self.name, check_name, e)
                results[check_name] = {"ok": False, "error": f"{type(e).__name__}: {e}"}
                continue
            if not results[check_name].get("ok", False):
                logger.warning("%s: check %s failed", self.name, check_name)
        return results

    def generate_report(self) -> Dict:
        """
        Generate the verification report.

        This is an abstract method that must be implemented by subclasses.

        Returns:
            Dict: A dictionary with at least the following structure:
                {
                    "name": str,     # Verification name
                    "ok": bool,      # Overall outcome
                }

        Raises:
            NotImplementedError: This method must be implemented by subclasses
        """
        raise NotImplementedError("Subclasses must implement generate_report")

    def render_text(self, report: Dict) -> str:
        """Human-readable rendering; nested values are indented below their key."""
        lines = []

        def walk(value, indent: int, key: Optional[str]):
            pad = "  " * indent
            prefix = f"{pad}{key}:" if key is not None else f"{pad}-"
            if isinstance(value, dict):
                lines.append(prefix)
                for k, v in value.items():
                    walk(v, indent + 1, k)
            elif isinstance(value, list):
                lines.append(prefix)
                for item in value:
                    walk(item, indent + 1, None)
            elif isinstance(value, str) and "\n" in value:
                lines.append(prefix)
                lines.extend(f"{pad}  {line}" for line in value.splitlines())
            else:
                lines.append(f"{prefix} {value}")

        for k, v in report.items():
            walk(v, 0, k)
        return "\n".join(lines)

    def emit_report(
        self, report: Optional[Dict] = None, output_format: str = "text", out_path: Optional[str] = None
    ) -> str:
        """
        Print the report or write it to a file.

        Args:
            report (Optional[Dict]): Report to emit; generated when omitted
            output_format (str): ``text`` or ``json``
            out_path (Optional[str]): File to write instead of printing

        Returns:
            str: The emitted text

        Raises:
            ValueError: If the output format is unknown
        """
        if report is None:
            report = self.report if self.report is not None else self.generate_report()
        self.report = report

        if output_format == "json":
            payload = {"schema": SCHEMA_VERSION}
            payload.update(report)
            text = json.dumps(payload, indent=2, ensure_ascii=False)
        elif output_format == "text":
            text = self.render_text(report)
        else:
            raise ValueError(f"Unknown output format: {output_format}")

        if out_path:
            with open(out_path, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
            logger.info("%s: report written to %s", self.name, out_path)
        else:
            print(text)
        return text
