# JSON and table reports
