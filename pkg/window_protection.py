import functools
import logging

from PyQt6.QtWidgets import QMessageBox, QDialog, QVBoxLayout, QLabel, QProgressBar
from PyQt6.QtCore import Qt

logger = logging.getLogger(__name__)

BUSY_MESSAGE = "An instance is already being checked. Please wait."
NO_VERDICT_MESSAGE = "No verdict to export. Open an instance first."


class CircularProgressDialog(QDialog):
    """Frameless overlay showing the current pipeline stage and its percentage"""

    def __init__(self, parent=None):
        super().__init__(parent)
        self.setWindowFlags(Qt.WindowType.FramelessWindowHint | Qt.WindowType.Dialog)
        self.setModal(True)
        self.setStyleSheet(
            "QDialog { background-color: #1e293b; border-radius: 8px; }"
            "QLabel { color: white; font-size: 13px; font-weight: bold; }"
        )

        layout = QVBoxLayout(self)
        layout.setContentsMargins(18, 14, 18, 14)
        self.stage_label = QLabel("Starting...", self)
        self.stage_label.setAlignment(Qt.AlignmentFlag.AlignCenter)
        self.bar = QProgressBar(self)
        self.bar.setRange(0, 100)
        self.bar.setTextVisible(True)
        layout.addWidget(self.stage_label)
        layout.addWidget(self.bar)
        self.setFixedSize(260, 90)

    @property
    def value(self) -> int:
        return self.bar.value()

    def setLabelText(self, text):
        self.stage_label.setText(text)

    def setValue(self, value, text=None):
        self.bar.setValue(value)
        if text:
            self.stage_label.setText(text)

    def showEvent(self, event):
        super().showEvent(event)
        parent = self.parent()
        if parent:
            self.move(parent.geometry().center() - self.rect().center())


def _report(window, title, error):
    logger.exception(f"{title}: {error}")
    QMessageBox.critical(window, "Error", f"{title}: {error}")


class WindowProtection:
    """Method wrappers that turn exceptions into message boxes instead of crashing the event loop"""

    @staticmethod
    def protect_method(method):
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            try:
                return method(self, *args, **kwargs)
            except Exception as e:
                _report(self, f"{method.__name__} failed", e)
                return None
        return wrapper

    @staticmethod
    def protect_identify(method):
        """One identify run at a time; the flag is cleared by the finished/error handlers"""
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            if self.is_analyzing:
                QMessageBox.warning(self, "Busy", BUSY_MESSAGE)
                return None
            self.is_analyzing = True
            try:
                return method(self, *args, **kwargs)
            except Exception as e:
                self.is_analyzing = False
                _report(self, "Identify failed", e)
                return None
        return wrapper

    @staticmethod
    def protect_export(method):
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            if getattr(self, "verdict", None) is None:
                QMessageBox.warning(self, "Nothing to export", NO_VERDICT_MESSAGE)
                return None
            try:
                return method(self, *args, **kwargs)
            except Exception as e:
                _report(self, "Export failed", e)
                return None
        return wrapper

    @staticmethod
    def protect_ui_update(method):
        @functools.wraps(method)
        def wrapper(self, *args, **kwargs):
            if getattr(self, "verdict", None) is None:
                return None
            try:
                return method(self, *args, **kwargs)
            except Exception as e:
                _report(self, f"Could not refresh the view ({method.__name__})", e)
                return None
        return wrapper


PROTECTIONS = {
    "load_instance": WindowProtection.protect_identify,
    "export_verdict": WindowProtection.protect_export,
    "open_instance": WindowProtection.protect_method,
    "update_summary": WindowProtection.protect_ui_update,
    "update_points": WindowProtection.protect_ui_update,
    "update_profile": WindowProtection.protect_ui_update,
}


def protect_window(window_class):
    """Class decorator wrapping the window's entry points with the matching protection"""
    window_class.is_analyzing = False
    for name, protection in PROTECTIONS.items():
        if hasattr(window_class, name):
            setattr(window_class, name, protection(getattr(window_class, name)))
    return window_class
