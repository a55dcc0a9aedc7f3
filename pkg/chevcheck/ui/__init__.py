from chevcheck.ui.styles import APP_CSS, PARAMS_DIALOG_CSS

__all__ = ["APP_CSS", "PARAMS_DIALOG_CSS"]
