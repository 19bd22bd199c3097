package junk

func X() {
	if outer {
		if EnableFastPath {
			never()
		}
	}
}
