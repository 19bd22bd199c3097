package worker

const (
	modeIdle = iota
	enableMetrics
	modeBusy
)

func Tick(w *W) {
	if w.on {
		if enableMetrics != 0 {
			w.emit()
		}
	}
	if EnableFastPath {
		w.fast()
	}
}
