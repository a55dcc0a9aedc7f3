APP_CSS = """
App {
    background: #0a0d12;
    color: #dde5f2;
}
Screen {
    layout: vertical;
}
Header, Footer {
    background: #111826;
    color: #dde5f2;
}
#main {
    layout: grid;
    grid-size: 3;
    grid-columns: 1.2fr 1.3fr 1fr;
    height: 1fr;
}
.pane {
    background: #0e1420;
    padding: 0 1;
    overflow: hidden;
}
.pane.right-divider {
    border-right: solid #243248;
}
.pane:focus-within {
    background: #121b2a;
}
.pane-title {
    height: 1;
    color: #96acd2;
    text-style: bold;
}
#report_meta {
    height: 1;
    color: #90a4c6;
    margin-bottom: 1;
}
#scenarios {
    height: 1fr;
    background: #0e1420;
}
#details {
    height: 1fr;
    background: #0e1420;
    scrollbar-size-vertical: 1;
}
#log {
    height: 1fr;
    background: #0e1420;
    scrollbar-size-vertical: 1;
}
#status {
    height: 1;
    background: #15263f;
    color: #ffffff;
    padding: 0 1;
}
#status.running {
    background: #3a3312;
}
#status.has-failures {
    background: #4a1a1f;
}
"""

PARAMS_DIALOG_CSS = """
ParamsDialog {
    align: center middle;
}
#params-dialog-container {
    width: 64;
    height: auto;
    background: #1a2235;
    border: solid #3a5070;
    padding: 1 2;
}
#params-dialog-title {
    text-style: bold;
    color: #96acd2;
    margin-bottom: 1;
}
.params-label {
    color: #90a4c6;
}
#params-dialog-container Input {
    margin-bottom: 1;
}
#params-error {
    color: red;
    height: 1;
}
#params-buttons {
    height: 3;
    align: right middle;
}
#params-buttons Button {
    margin-left: 1;
}
"""
