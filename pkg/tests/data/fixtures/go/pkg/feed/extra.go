package feed

func Warm() {
	if EnableFastPath {
		prime()
	}
}
