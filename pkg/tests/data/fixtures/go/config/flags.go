package config

const (
	EnableFastPath = true
	EnableSlowPath = false
	DeadSwitch     = true
)

var registry = map[string]bool{
	"enableMetrics": true,
	"enableTracing": false,
}
