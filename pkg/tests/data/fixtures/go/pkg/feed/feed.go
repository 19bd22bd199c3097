package feed

import "fmt"

// EnableFastPath gates the short-circuit path.
func Run(cfg Config) {
	fast := EnableSlowPath
	if cfg.ready {
		if EnableFastPath {
			fmt.Println("fast")
		}
		if fast {
			serve()
		}
	}
	fmt.Println("EnableFastPath")
}
